#pragma once

#include "gridlike/bramble.hpp"
#include "gridlike/error.hpp"
#include "gridlike/extraction.hpp"
#include "gridlike/generators.hpp"
#include "gridlike/graph.hpp"
#include "gridlike/grid_like_minor.hpp"
#include "gridlike/minor.hpp"
#include "gridlike/product.hpp"
#include "gridlike/random.hpp"
#include "gridlike/transversal.hpp"
