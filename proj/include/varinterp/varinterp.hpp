#pragma once

// Umbrella header. The command-line layer (cli.hpp) is separate: it needs CLI11 and nlohmann/json.

#include "error.hpp"
#include "scalar.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "parse.hpp"
#include "linalg.hpp"
#include "groebner.hpp"
#include "ideal.hpp"
#include "interp.hpp"
#include "pde.hpp"
#include "problem.hpp"
