#pragma once

// Integer Hermite and Smith normal forms on dense Eigen matrices.

#include <Eigen/Core>
#include <cstdlib>
#include <utility>
#include <vector>

namespace vbs {

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using IntVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
Scalar floor_div(Scalar a, Scalar b) {
    Scalar q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

template <typename Scalar>
Scalar floor_mod(Scalar a, Scalar b) {
    return a - b * floor_div(a, b);
}

// Row Hermite normal form of the row lattice of A: echelon rows, positive
// pivots, entries above each pivot reduced into [0, pivot).  Zero rows are
// dropped.
template <typename Derived>
IntMatrix<typename Derived::Scalar> hermite_normal_form(const Eigen::MatrixBase<Derived>& A) {
    using Scalar = typename Derived::Scalar;
    IntMatrix<Scalar> H = A;
    const Eigen::Index m = H.rows(), n = H.cols();
    Eigen::Index r = 0;
    for (Eigen::Index col = 0; col < n && r < m; ++col) {
        for (;;) {
            Eigen::Index best = -1;
            for (Eigen::Index i = r; i < m; ++i)
                if (H(i, col) != 0 && (best < 0 || std::abs(H(i, col)) < std::abs(H(best, col)))) best = i;
            if (best < 0) break;
            H.row(r).swap(H.row(best));
            bool clean = true;
            for (Eigen::Index i = r + 1; i < m; ++i) {
                if (H(i, col) == 0) continue;
                H.row(i) -= (H(i, col) / H(r, col)) * H.row(r);
                if (H(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (H(r, col) == 0) continue;
        if (H(r, col) < 0) H.row(r) = -H.row(r);
        for (Eigen::Index i = 0; i < r; ++i) H.row(i) -= floor_div(H(i, col), H(r, col)) * H.row(r);
        ++r;
    }
    return H.topRows(r);
}

// Canonical representative of x modulo the row lattice of H, where H is in
// the form returned by hermite_normal_form.
template <typename DerivedH, typename DerivedX>
IntVector<typename DerivedH::Scalar> hnf_reduce(const Eigen::MatrixBase<DerivedH>& H, const Eigen::MatrixBase<DerivedX>& x) {
    using Scalar = typename DerivedH::Scalar;
    IntVector<Scalar> y = x;
    for (Eigen::Index i = 0; i < H.rows(); ++i) {
        Eigen::Index p = 0;
        while (H(i, p) == 0) ++p;
        y -= floor_div(y(p), H(i, p)) * H.row(i).transpose();
    }
    return y;
}

template <typename Scalar>
struct SmithForm {
    IntMatrix<Scalar> U;  // rows x rows, unimodular
    IntMatrix<Scalar> V;  // cols x cols, unimodular
    IntMatrix<Scalar> D;  // U * A * V
    std::vector<Scalar> invariants;  // nonzero diagonal entries, each dividing the next
};

template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& A) {
    using Scalar = typename Derived::Scalar;
    SmithForm<Scalar> s;
    const Eigen::Index m = A.rows(), n = A.cols();
    IntMatrix<Scalar> D = A;
    IntMatrix<Scalar> U = IntMatrix<Scalar>::Identity(m, m);
    IntMatrix<Scalar> V = IntMatrix<Scalar>::Identity(n, n);

    for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
        bool any = false;
        for (;;) {
            Eigen::Index bi = -1, bj = -1;
            for (Eigen::Index i = t; i < m; ++i)
                for (Eigen::Index j = t; j < n; ++j)
                    if (D(i, j) != 0 && (bi < 0 || std::abs(D(i, j)) < std::abs(D(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0) break;
            any = true;
            D.row(t).swap(D.row(bi));
            U.row(t).swap(U.row(bi));
            D.col(t).swap(D.col(bj));
            V.col(t).swap(V.col(bj));

            bool clean = true;
            for (Eigen::Index i = t + 1; i < m; ++i) {
                Scalar q = D(i, t) / D(t, t);
                if (q != 0) {
                    D.row(i) -= q * D.row(t);
                    U.row(i) -= q * U.row(t);
                }
                if (D(i, t) != 0) clean = false;
            }
            for (Eigen::Index j = t + 1; j < n; ++j) {
                Scalar q = D(t, j) / D(t, t);
                if (q != 0) {
                    D.col(j) -= q * D.col(t);
                    V.col(j) -= q * V.col(t);
                }
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            Eigen::Index bad = -1;
            for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
                for (Eigen::Index j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            D.row(t) += D.row(bad);
            U.row(t) += U.row(bad);
        }
        if (!any) break;
        if (D(t, t) < 0) {
            D.row(t) = -D.row(t);
            U.row(t) = -U.row(t);
        }
        s.invariants.push_back(D(t, t));
    }
    s.U = std::move(U);
    s.V = std::move(V);
    s.D = std::move(D);
    return s;
}

}  // namespace vbs
