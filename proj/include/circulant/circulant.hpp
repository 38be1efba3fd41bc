#pragma once

// Exact and numerical two-point resistances, Kirchhoff indices, and
// random-walk first-passage statistics for circulant graphs.

#include "checks.hpp"
#include "closed_form.hpp"
#include "errors.hpp"
#include "fibonacci.hpp"
#include "graph.hpp"
#include "json_writer.hpp"
#include "numbers.hpp"
#include "oracle.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "spectral.hpp"
#include "walk.hpp"
