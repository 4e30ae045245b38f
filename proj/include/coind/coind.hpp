#pragma once

// umbrella header

#include "coind/action.hpp"
#include "coind/catalog.hpp"
#include "coind/coinduction.hpp"
#include "coind/core.hpp"
#include "coind/filtration.hpp"
#include "coind/group.hpp"
#include "coind/harness/cli.hpp"
#include "coind/harness/oracles.hpp"
#include "coind/harness/report.hpp"
#include "coind/harness/spec_file.hpp"
#include "coind/harness/suites.hpp"
#include "coind/homomorphism.hpp"
#include "coind/semidirect.hpp"
#include "coind/subgroup.hpp"
#include "coind/topgroup.hpp"
#include "coind/topology.hpp"
