#pragma once

// Umbrella header. report_json.hpp is left out because it needs nlohmann/json.

#include "smeadow/approx.hpp"
#include "smeadow/axioms.hpp"
#include "smeadow/canonical.hpp"
#include "smeadow/check.hpp"
#include "smeadow/complex.hpp"
#include "smeadow/errors.hpp"
#include "smeadow/eval.hpp"
#include "smeadow/f3_argument.hpp"
#include "smeadow/finite_field.hpp"
#include "smeadow/kernel.hpp"
#include "smeadow/parse.hpp"
#include "smeadow/random.hpp"
#include "smeadow/rational.hpp"
#include "smeadow/simplifier.hpp"
#include "smeadow/term.hpp"
