#pragma once

#include "goldcalc/combinatorics.hpp"
#include "goldcalc/dynamics.hpp"
#include "goldcalc/error.hpp"
#include "goldcalc/functions.hpp"
#include "goldcalc/golden.hpp"
#include "goldcalc/hydro.hpp"
#include "goldcalc/io.hpp"
#include "goldcalc/operators.hpp"
#include "goldcalc/polynomial.hpp"
#include "goldcalc/verify.hpp"
