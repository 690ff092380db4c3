#pragma once

// Convenience umbrella for the whole library.

#include "fapx/adapter.hpp"
#include "fapx/bench.hpp"
#include "fapx/errors.hpp"
#include "fapx/graph.hpp"
#include "fapx/instance.hpp"
#include "fapx/motzkin.hpp"
#include "fapx/oracles.hpp"
#include "fapx/rational.hpp"
#include "fapx/reductions.hpp"
#include "fapx/schemes.hpp"
