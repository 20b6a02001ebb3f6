#pragma once

// Umbrella header for the whole library.

#include "arboral/geometry.hpp"
#include "arboral/rng.hpp"
#include "arboral/sequence.hpp"
#include "arboral/initial_tree.hpp"
#include "arboral/last_touch.hpp"
#include "arboral/greedy.hpp"
#include "arboral/patterns.hpp"
#include "arboral/experiments.hpp"
#include "arboral/io.hpp"
#include "arboral/svg.hpp"
