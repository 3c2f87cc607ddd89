#ifndef ACTIONGRAPH_ACTIONGRAPH_HPP
#define ACTIONGRAPH_ACTIONGRAPH_HPP

// Umbrella header.

#include <actiongraph/action_graph.hpp>
#include <actiongraph/bijection.hpp>
#include <actiongraph/catalan.hpp>
#include <actiongraph/errors.hpp>
#include <actiongraph/export.hpp>
#include <actiongraph/planar_tree.hpp>

#endif  // ACTIONGRAPH_ACTIONGRAPH_HPP
