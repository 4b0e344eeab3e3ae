#pragma once

#include <map>
#include <vector>

#include "symtor/linalg.hpp"
#include "symtor/report.hpp"

namespace symtor {

/// A root of C_r as integer coefficients over epsilon_1..epsilon_r.
using RootVec = std::vector<int>;

/// The C_r root system: short roots +-(e_i +- e_j), long roots +-2e_i, with
/// the standard pairing (e_i, e_j) = delta_ij.
class RootDatumC {
public:
    explicit RootDatumC(int r) : r_(r) {
        if (r < 2) throw Error("bad-rank", "C_r needs r >= 2");
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                if (i == j) continue;
                RootVec v(r, 0);
                v[i] = 1;
                v[j] = -1;
                push(v);
            }
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                for (int s : {1, -1}) {
                    RootVec v(r, 0);
                    v[i] = s;
                    v[j] = s;
                    push(v);
                }
        for (int i = 0; i < r; ++i)
            for (int s : {1, -1}) {
                RootVec v(r, 0);
                v[i] = 2 * s;
                push(v);
            }
    }

    int rank() const { return r_; }
    int size() const { return static_cast<int>(roots_.size()); }
    const RootVec& root(int idx) const { return roots_.at(idx); }

    int index_of(const RootVec& v) const {
        auto it = index_.find(v);
        return it == index_.end() ? -1 : it->second;
    }

    bool is_root(const RootVec& v) const { return index_.count(v) > 0; }

    static int dot(const RootVec& a, const RootVec& b) {
        int s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    }

    bool is_long(int idx) const { return dot(roots_[idx], roots_[idx]) == 4; }
    bool is_short(int idx) const { return !is_long(idx); }

    std::vector<int> long_roots() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (is_long(i)) out.push_back(i);
        return out;
    }
    std::vector<int> short_roots() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (is_short(i)) out.push_back(i);
        return out;
    }

    /// Cartan integer <nu, mu^vee> = 2(nu, mu)/(mu, mu).
    int cartan(const RootVec& nu, const RootVec& mu) const {
        if (!is_root(mu)) throw Error("not-a-root", "coroot of a non-root");
        int num = 2 * dot(nu, mu);
        int den = dot(mu, mu);
        if (num % den != 0) throw Error("internal", "non-integral Cartan pairing");
        return num / den;
    }

    /// Coefficients of mu^vee over the coroot basis h_1..h_r.
    std::vector<Rational> coroot_coeffs(const RootVec& mu) const {
        if (!is_root(mu)) throw Error("not-a-root", "coroot of a non-root");
        Rational scale = Rational(2, dot(mu, mu));
        std::vector<Rational> out;
        for (int c : mu) out.push_back(scale * c);
        return out;
    }

    RootVec negated(int idx) const {
        RootVec v = roots_[idx];
        for (int& c : v) c = -c;
        return v;
    }

private:
    void push(const RootVec& v) {
        index_[v] = static_cast<int>(roots_.size());
        roots_.push_back(v);
    }

    int r_;
    std::vector<RootVec> roots_;
    std::map<RootVec, int> index_;
};

/// Matrix realization of sp_2r and its irreducible companion module inside
/// gl_2r: g = {x : x^t M = -M x} and s = {s : s^t M = M s, tr s = 0} for the
/// skew form M with (i,j)-entry sign(i-j) delta_{i+j,2r+1}.
class SymplecticLayer {
public:
    explicit SymplecticLayer(int r) : r_(r), roots_(r) {
        const int n = 2 * r;
        M_ = QMat::Zero(n, n);
        for (int i = 1; i <= n; ++i) {
            int j = n + 1 - i;
            M_(i - 1, j - 1) = i > j ? 1 : -1;
        }
    }

    int rank() const { return r_; }
    int dim() const { return 2 * r_; }
    const RootDatumC& roots() const { return roots_; }
    const QMat& form() const { return M_; }

    QMat E(int i, int j) const {
        QMat m = QMat::Zero(dim(), dim());
        m(i - 1, j - 1) = 1;
        return m;
    }

    /// Cartan basis h_i = E_ii - E_{2r+1-i,2r+1-i}, 1-indexed.
    QMat h(int i) const {
        const int n = dim();
        return QMat(E(i, i) - E(n + 1 - i, n + 1 - i));
    }

    /// Root vector of sp_2r for mu. Short roots follow the listed matrix
    /// forms; each long root 2e_i is spanned by the single matrix unit
    /// E_{i,2r+1-i}.
    QMat g_basis(const RootVec& mu) const {
        const int n = dim();
        auto [i, j, kind] = classify(mu);
        switch (kind) {
            case RootKind::diff: // e_i - e_j
                return QMat(E(i, j) - E(n + 1 - j, n + 1 - i));
            case RootKind::sum: // e_i + e_j, i < j
                return QMat(E(i, n + 1 - j) + E(j, n + 1 - i));
            case RootKind::neg_sum: // -e_i - e_j, i < j
                return QMat(E(n + 1 - j, i) + E(n + 1 - i, j));
            case RootKind::lng: // 2 e_i
                return E(i, n + 1 - i);
            case RootKind::neg_lng: // -2 e_i
                return E(n + 1 - i, i);
        }
        throw Error("not-a-root", "no sp root vector for this weight");
    }

    /// Weight vector of the companion module for a short weight. The sum and
    /// negated-sum forms are antisymmetric in (i, j), fixed here by i < j.
    QMat s_basis(const RootVec& w) const {
        const int n = dim();
        auto [i, j, kind] = classify(w);
        switch (kind) {
            case RootKind::diff:
                return QMat(E(i, j) + E(n + 1 - j, n + 1 - i));
            case RootKind::sum:
                return QMat(E(i, n + 1 - j) - E(j, n + 1 - i));
            case RootKind::neg_sum:
                return QMat(E(n + 1 - j, i) - E(n + 1 - i, j));
            default:
                throw Error("not-a-weight", "module weights are the short roots");
        }
    }

    /// Zero-weight basis of the module: trace-normalized symmetric diagonals
    /// v_k = u_k - (1/r) sum_j u_j with u_i = E_ii + E_{2r+1-i,2r+1-i},
    /// k = 1..r-1.
    QMat s_zero_basis(int k) const {
        if (k < 1 || k > r_ - 1) throw Error("bad-index", "zero-weight index out of range");
        const int n = dim();
        QMat u = QMat::Zero(n, n);
        for (int j = 1; j <= r_; ++j) {
            Rational c = Rational(-1, r_) + (j == k ? Rational(1) : Rational(0));
            u(j - 1, j - 1) = c;
            u(n - j, n - j) = c;
        }
        return u;
    }

    bool in_g(const QMat& x) const { return QMat(x.transpose() * M_ + M_ * x).isZero(0); }
    bool in_s(const QMat& s) const {
        return QMat(s.transpose() * M_ - M_ * s).isZero(0) && s.trace() == 0;
    }

    QMat circ(const QMat& w, const QMat& z) const {
        Rational t = (w * z).trace();
        QMat out = w * z + z * w;
        if (t != 0) {
            Rational f = t / r_;
            for (int i = 0; i < dim(); ++i) out(i, i) -= f;
        }
        return out;
    }

    static QMat bracket(const QMat& w, const QMat& z) { return w * z - z * w; }
    static Rational trace_form(const QMat& w, const QMat& z) { return (w * z).trace(); }

    /// Coroot mu^vee as a diagonal matrix in the Cartan subalgebra.
    QMat coroot(const RootVec& mu) const {
        auto coeffs = roots_.coroot_coeffs(mu);
        QMat out = QMat::Zero(dim(), dim());
        for (int i = 1; i <= r_; ++i) out += h(i) * coeffs[i - 1];
        return out;
    }

    /// Weight of a diagonal Cartan element paired against a weight vector.
    Rational weight_value(const RootVec& w, const QMat& cartan_elt) const {
        Rational out = 0;
        for (int i = 1; i <= r_; ++i) out += Rational(w[i - 1]) * cartan_elt(i - 1, i - 1);
        return out;
    }

    // -- decomposition into the indexed bases ------------------------------

    /// Layer indices: [0, 2r^2) root vectors, then r Cartan slots (for g) or
    /// r-1 zero-weight slots (for s).
    int layer_root_count() const { return roots_.size(); }
    int g_layer_dim() const { return roots_.size() + r_; }
    int s_layer_dim() const {
        return static_cast<int>(roots_.short_roots().size()) + r_ - 1;
    }

    /// Valid layer indices, in a fixed order. The module shares root indices
    /// with sp, so its long-root slots are skipped.
    std::vector<int> g_layer_slots() const {
        std::vector<int> out;
        for (int i = 0; i < roots_.size() + r_; ++i) out.push_back(i);
        return out;
    }
    std::vector<int> s_layer_slots() const {
        std::vector<int> out = roots_.short_roots();
        for (int k = 0; k < r_ - 1; ++k) out.push_back(roots_.size() + k);
        return out;
    }

    QMat g_layer_matrix(int layer) const {
        if (layer < roots_.size()) return g_basis(roots_.root(layer));
        return h(layer - roots_.size() + 1);
    }

    QMat s_layer_matrix(int layer) const {
        if (layer < roots_.size()) {
            if (!roots_.is_short(layer))
                throw Error("bad-index", "long layer index in the module");
            return s_basis(roots_.root(layer));
        }
        return s_zero_basis(layer - roots_.size() + 1);
    }

    /// Weight of a layer slot (zero for Cartan and zero-weight slots).
    RootVec layer_weight(int layer) const {
        if (layer < roots_.size()) return roots_.root(layer);
        return RootVec(r_, 0);
    }

    /// Expands x in the g basis, reading coefficients off distinguished
    /// entries and verifying the reconstruction exactly.
    std::vector<std::pair<int, Rational>> decompose_g(const QMat& x) const {
        std::vector<std::pair<int, Rational>> out;
        QMat rest = x;
        const int n = dim();
        for (int idx = 0; idx < roots_.size(); ++idx) {
            auto [i, j, kind] = classify(roots_.root(idx));
            Rational c;
            switch (kind) {
                case RootKind::diff: c = x(i - 1, j - 1); break;
                case RootKind::sum: c = x(i - 1, n - j); break;
                case RootKind::neg_sum: c = x(n - j, i - 1); break;
                case RootKind::lng: c = x(i - 1, n - i); break;
                case RootKind::neg_lng: c = x(n - i, i - 1); break;
            }
            if (c != 0) {
                out.push_back({idx, c});
                rest -= g_basis(roots_.root(idx)) * c;
            }
        }
        for (int i = 1; i <= r_; ++i) {
            Rational c = rest(i - 1, i - 1);
            if (c != 0) {
                out.push_back({roots_.size() + i - 1, c});
                rest -= h(i) * c;
            }
        }
        if (!rest.isZero(0)) throw Error("not-in-g", "matrix is not in the span of the g basis");
        return out;
    }

    std::vector<std::pair<int, Rational>> decompose_s(const QMat& x) const {
        std::vector<std::pair<int, Rational>> out;
        QMat rest = x;
        const int n = dim();
        for (int idx = 0; idx < roots_.size(); ++idx) {
            if (!roots_.is_short(idx)) continue;
            auto [i, j, kind] = classify(roots_.root(idx));
            Rational c;
            switch (kind) {
                case RootKind::diff: c = x(i - 1, j - 1); break;
                case RootKind::sum: c = x(i - 1, n - j); break;
                case RootKind::neg_sum: c = x(n - j, i - 1); break;
                default: continue;
            }
            if (c != 0) {
                out.push_back({idx, c});
                rest -= s_basis(roots_.root(idx)) * c;
            }
        }
        // Zero-weight part: c_k = d_k - d_r over v_1..v_{r-1}. Snapshot the
        // diagonal first; the subtractions below touch it.
        std::vector<Rational> d(r_);
        for (int k = 1; k <= r_; ++k) d[k - 1] = rest(k - 1, k - 1);
        for (int k = 1; k <= r_ - 1; ++k) {
            Rational c = d[k - 1] - d[r_ - 1];
            if (c != 0) {
                out.push_back({roots_.size() + k - 1, c});
                rest -= s_zero_basis(k) * c;
            }
        }
        if (!rest.isZero(0)) throw Error("not-in-s", "matrix is not in the span of the s basis");
        return out;
    }

private:
    enum class RootKind { diff, sum, neg_sum, lng, neg_lng };

    /// Returns 1-indexed (i, j, kind) for a root/weight vector.
    std::tuple<int, int, RootKind> classify(const RootVec& v) const {
        int pos2 = -1, neg2 = -1, npos = 0, nneg = 0, pos[2] = {0, 0}, neg[2] = {0, 0};
        for (int i = 0; i < r_; ++i) {
            if (v[i] == 2) pos2 = i + 1;
            else if (v[i] == -2) neg2 = i + 1;
            else if (v[i] == 1 && npos < 2) pos[npos++] = i + 1;
            else if (v[i] == -1 && nneg < 2) neg[nneg++] = i + 1;
            else if (v[i] != 0) throw Error("not-a-root", "bad coefficient");
        }
        if (pos2 > 0) return {pos2, pos2, RootKind::lng};
        if (neg2 > 0) return {neg2, neg2, RootKind::neg_lng};
        if (npos == 1 && nneg == 1) return {pos[0], neg[0], RootKind::diff};
        if (npos == 2) return {pos[0], pos[1], RootKind::sum};
        if (nneg == 2) return {neg[0], neg[1], RootKind::neg_sum};
        throw Error("not-a-root", "unrecognized weight");
    }

    int r_;
    RootDatumC roots_;
    QMat M_;
};

} // namespace symtor
