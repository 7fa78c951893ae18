#pragma once

// Linear complexity and minimal connection polynomials of periodic sequences
// over GF(p^m): field and polynomial arithmetic, the gcd oracle,
// Berlekamp-Massey, generalized Games-Chan and the period-un reduction.

#include "berlekamp_massey.hpp"
#include "error.hpp"
#include "field.hpp"
#include "games_chan.hpp"
#include "number_theory.hpp"
#include "op_count.hpp"
#include "poly.hpp"
#include "reduction.hpp"
#include "sequence.hpp"
