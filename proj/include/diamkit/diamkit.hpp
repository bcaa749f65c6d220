#pragma once

#include "caps.hpp"
#include "chair_solver.hpp"
#include "colouring.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "nae.hpp"
#include "oracle.hpp"
#include "pattern.hpp"
#include "problem.hpp"
#include "reductions.hpp"
