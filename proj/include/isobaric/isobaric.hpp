#pragma once

#include "isobaric/bigint.hpp"
#include "isobaric/exponent.hpp"
#include "isobaric/json_io.hpp"
#include "isobaric/latex.hpp"
#include "isobaric/lattice.hpp"
#include "isobaric/operators.hpp"
#include "isobaric/polynomial.hpp"
#include "isobaric/rational.hpp"
#include "isobaric/solver.hpp"
#include "isobaric/strings.hpp"
#include "isobaric/weights.hpp"
