#pragma once

#include <string>

#include "nilloop/loop.hpp"

namespace nilloop {

FiniteLoop make_cyclic(int n);
FiniteLoop make_dihedral(int n);        // order 2n, n >= 1
FiniteLoop make_quaternion8();
FiniteLoop make_elementary_abelian(int p, int k);
FiniteLoop direct_product(const FiniteLoop& A, const FiniteLoop& B);
FiniteLoop make_heisenberg27();         // unitriangular 3x3 over F_3

// The sixteen unit octonions, built by Cayley-Dickson doubling of the
// quaternion units. Index 2b+s is (-1)^s e_b with e_0 = 1.
FiniteLoop make_octonion_loop();

// Symmetric group on three letters with the pinned element order
// id, (12), (13), (23), (123), (132); product x*y acts as "y then x".
FiniteLoop make_s3();

// Z/m x| S3 where transpositions negate Z/m and 3-cycles act trivially.
// Element a*6+s is the pair (a, s); the canonical section is a |-> (0, a).
FiniteLoop make_semidirect_zm_s3(int m);

// Lookup by the CLI's builtin names (o16, q8, s3, d4, d8, z/<n>,
// ea<p>_<k>, heisenberg27, z9_semidirect_s3, z3_semidirect_s3).
FiniteLoop builtin_loop(const std::string& name);

} // namespace nilloop
