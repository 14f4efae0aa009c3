#pragma once
#include <optional>
#include <vector>

#include "twistkit/error.hpp"
#include "twistkit/rational.hpp"

namespace tk {

/* Dense exact matrices. QMat holds rationals, ZMat integers; both are
   row-major vectors of rows. */
using QRow = std::vector<Rat>;
using QMat = std::vector<QRow>;
using ZRow = std::vector<Int>;
using ZMat = std::vector<ZRow>;

QMat q_identity(int n);
QMat q_mul(const QMat& a, const QMat& b);
QRow q_apply(const QMat& a, const QRow& v);
QMat q_transpose(const QMat& a);

ZMat z_identity(int n);
ZMat z_mul(const ZMat& a, const ZMat& b);
ZRow z_apply(const ZMat& a, const ZRow& v);
ZMat z_transpose(const ZMat& a);
QMat z_to_q(const ZMat& a);

int q_rank(QMat a);                       // Gauss over the rationals
int z_rank_bareiss(ZMat a);               // fraction-free, independent of q_rank
Rat q_det(QMat a);
Int z_det_bareiss(ZMat a);

/* Inverse of an integer matrix with det = +-1; fails otherwise. */
ZMat z_inverse_unimodular(const ZMat& a);

/* One solution of A x = b, or nullopt when inconsistent. Underdetermined
   systems return the solution with free variables set to 0. */
std::optional<QRow> q_solve(QMat a, QRow b);

/* Integer solutions of A x = b via column-style Hermite reduction. */
std::optional<ZRow> z_solve(const ZMat& a, const ZRow& b);

/* Basis of the rational null space of A. */
std::vector<QRow> q_nullspace(QMat a);

} // namespace tk
