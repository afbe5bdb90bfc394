#pragma once

#include "graph.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "subcube.hpp"
#include "families.hpp"
#include "reductions.hpp"
#include "solver.hpp"
