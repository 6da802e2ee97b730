#pragma once

// Umbrella header: sharp constants for Taylor-remainder bounds on
// characteristic functions, third-moment bounds, reference table,
// brute-force oracle, and the property-verification harness.

#include "sharpchf/constants.hpp"
#include "sharpchf/distributions.hpp"
#include "sharpchf/law_json.hpp"
#include "sharpchf/moment_bounds.hpp"
#include "sharpchf/numerics.hpp"
#include "sharpchf/oracle.hpp"
#include "sharpchf/remainder.hpp"
#include "sharpchf/table.hpp"
#include "sharpchf/verifier.hpp"
