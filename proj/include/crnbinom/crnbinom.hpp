#pragma once

// Unconditional binomiality of mass-action reaction network steady-state
// ideals, decided by exact linear algebra over the rationals, with a
// Buchberger oracle for cross-checking and a deterministic network
// generator for fuzzing.

#include "crnbinom/engine.hpp"
#include "crnbinom/groebner.hpp"
#include "crnbinom/kinetics.hpp"
#include "crnbinom/matrix.hpp"
#include "crnbinom/monomial.hpp"
#include "crnbinom/netgen.hpp"
#include "crnbinom/network.hpp"
#include "crnbinom/parser.hpp"
#include "crnbinom/polynomial.hpp"
#include "crnbinom/rational.hpp"
#include "crnbinom/report.hpp"
#include "crnbinom/variable.hpp"
