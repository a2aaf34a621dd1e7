#pragma once

#include "phasestar/ccr.hpp"
#include "phasestar/correspondence.hpp"
#include "phasestar/error.hpp"
#include "phasestar/exact.hpp"
#include "phasestar/expr.hpp"
#include "phasestar/fock.hpp"
#include "phasestar/json_io.hpp"
#include "phasestar/phase.hpp"
#include "phasestar/quasigrid.hpp"
