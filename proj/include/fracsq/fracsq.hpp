#pragma once

#include "cell_index.hpp"
#include "classifier.hpp"
#include "component_graphs.hpp"
#include "digit_set.hpp"
#include "disjoint_sets.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "grid_oracle.hpp"
#include "limits.hpp"
#include "offset_automaton.hpp"
#include "partition.hpp"
#include "pattern.hpp"
#include "render.hpp"
#include "report.hpp"
#include "scan.hpp"
#include "shape.hpp"
#include "vec.hpp"
