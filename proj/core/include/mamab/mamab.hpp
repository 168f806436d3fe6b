#pragma once

#include "mamab/bandit_env.hpp"
#include "mamab/coop_ucb2.hpp"
#include "mamab/errors.hpp"
#include "mamab/graph_core.hpp"
#include "mamab/matrix.hpp"
#include "mamab/rng.hpp"
#include "mamab/serialization.hpp"
#include "mamab/sim_harness.hpp"
#include "mamab/symmetric_eigen.hpp"
#include "mamab/weight_strategies.hpp"
