#pragma once

// Umbrella header: the full simulation stack.

#include "semibandit/cli.hpp"
#include "semibandit/config.hpp"
#include "semibandit/env.hpp"
#include "semibandit/errors.hpp"
#include "semibandit/graph.hpp"
#include "semibandit/harness.hpp"
#include "semibandit/io.hpp"
#include "semibandit/oracle.hpp"
#include "semibandit/policy.hpp"
#include "semibandit/regret.hpp"
#include "semibandit/rng.hpp"
#include "semibandit/strategy.hpp"
#include "semibandit/weights.hpp"
