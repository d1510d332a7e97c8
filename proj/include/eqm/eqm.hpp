#pragma once

#include "eqm/config.hpp"
#include "eqm/conjectures.hpp"
#include "eqm/continua.hpp"
#include "eqm/corpus.hpp"
#include "eqm/equilibrium.hpp"
#include "eqm/errors.hpp"
#include "eqm/extremal.hpp"
#include "eqm/greens.hpp"
#include "eqm/moments.hpp"
#include "eqm/parallel.hpp"
#include "eqm/potential.hpp"
#include "eqm/quadrature.hpp"
#include "eqm/random.hpp"
#include "eqm/realsets.hpp"
#include "eqm/report.hpp"
#include "eqm/test_functions.hpp"
#include "eqm/verify.hpp"
