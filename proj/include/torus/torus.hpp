#pragma once

#include "torus/board.hpp"
#include "torus/dims.hpp"
#include "torus/event_wheel.hpp"
#include "torus/io.hpp"
#include "torus/move.hpp"
#include "torus/oracle.hpp"
#include "torus/orientation.hpp"
#include "torus/permutation.hpp"
#include "torus/rng.hpp"
#include "torus/solver.hpp"
