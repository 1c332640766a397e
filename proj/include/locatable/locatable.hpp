#pragma once

#include "locatable/certificates.hpp"
#include "locatable/classifier.hpp"
#include "locatable/colouring.hpp"
#include "locatable/errors.hpp"
#include "locatable/generators.hpp"
#include "locatable/graph.hpp"
#include "locatable/graph_io.hpp"
#include "locatable/json_io.hpp"
#include "locatable/solver.hpp"
#include "locatable/strategy.hpp"
#include "locatable/subgraph.hpp"
#include "locatable/variance.hpp"
#include "locatable/vertex_set.hpp"
