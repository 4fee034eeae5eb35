#pragma once

#include "twistgen/catalog.hpp"
#include "twistgen/matrix.hpp"
#include "twistgen/words.hpp"

namespace twistgen {

// Induced action on first homology.  Over the rationals the matrices act on
// the reduced basis x_1..x_{g-1} (dimension g-1) and are kept as exact
// integer matrices; over F2 they act on all g crosscap classes; over F_p the
// rational matrices are reduced mod p.

IntMat twist_matrix_q(const Catalog& c, const std::string& curve);
F2Mat twist_matrix_f2(const Catalog& c, const std::string& curve);
FpMat twist_matrix_fp(const Catalog& c, const std::string& curve, int p);

IntMat symmetry_matrix_q(const Catalog& c, const std::string& sym);
F2Mat symmetry_matrix_f2(const Catalog& c, const std::string& sym);
FpMat symmetry_matrix_fp(const Catalog& c, const std::string& sym, int p);

// Generator resolution: symmetry names match exactly; an uppercase first
// letter denotes the twist about the corresponding lower-case curve.
IntMat generator_matrix_q(const Catalog& c, const std::string& gen, int exp);
F2Mat generator_matrix_f2(const Catalog& c, const std::string& gen, int exp);
FpMat generator_matrix_fp(const Catalog& c, const std::string& gen, int exp, int p);

IntMat evaluate_q(const Catalog& c, const Word& w);
F2Mat evaluate_f2(const Catalog& c, const Word& w);
FpMat evaluate_fp(const Catalog& c, const Word& w, int p);

// Unreduced g-dimensional action on the x-lattice (used for transporting
// curve data along words).
IntMat evaluate_x(const Catalog& c, const Word& w);

// Determinant homomorphism: det of the rational action, exactly +-1.
int d_value(const Catalog& c, const Word& w);

std::vector<Int> image_of_class_q(const Catalog& c, const Word& w, const std::string& curve);
std::uint64_t image_of_class_f2(const Catalog& c, const Word& w, const std::string& curve);

// Induced action of a g-dimensional F2 matrix on F2^g / <w>, written in the
// basis x_1..x_{g-1}; defined for matrices fixing w.
F2Mat f2_quotient_action(const F2Mat& m);

// Mod-2 reduction of a reduced rational matrix (dimension g-1).
F2Mat q_mod2(const IntMat& m);

std::string format_matrix(const IntMat& m);
std::string format_matrix(const F2Mat& m);
std::string format_matrix(const FpMat& m);

}  // namespace twistgen
