#pragma once

#include "jaco/big_count.hpp"
#include "jaco/edge_joint.hpp"
#include "jaco/errors.hpp"
#include "jaco/jaco_graph.hpp"
#include "jaco/recursion.hpp"
#include "jaco/sequences.hpp"
#include "jaco/simple_graph.hpp"
