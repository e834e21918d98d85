#include "divlab/branching.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace divlab {

namespace {

std::vector<Mask> basis_upto(const std::vector<Mask>& b, int r) {
    std::vector<Mask> out;
    for (Mask m : b)
        if (popcount(m) <= r) out.push_back(m);
    return out;
}

std::vector<Mask> basis_level(const std::vector<Mask>& b, int r) {
    std::vector<Mask> out;
    for (Mask m : b)
        if (popcount(m) == r) out.push_back(m);
    return out;
}

std::uint64_t count_avoiding(const std::vector<Mask>& sets, Mask avoid) {
    std::uint64_t c = 0;
    for (Mask m : sets)
        if (!(m & avoid)) ++c;
    return c;
}

int tau_of(const std::vector<Mask>& sets) { return sets.empty() ? 0 : min_hitting_set(sets).size; }

void require_saturated_intersecting(const Family& fam, const char* who) {
    if (!is_intersecting(fam)) throw std::invalid_argument(std::string(who) + ": family is not intersecting");
    if (!is_saturated(fam)) throw std::invalid_argument(std::string(who) + ": family is not saturated");
}

// Every k-set containing a basis element must be an edge, and vice versa.
void check_basis_reconstruction(const Family& fam, const std::vector<Mask>& b) {
    if (fam.k == 0) return;
    const std::uint64_t total = binom_u64(fam.n, fam.k);
    Mask h = full_mask(fam.k);
    for (std::uint64_t i = 0; i < total; ++i, h = next_same_popcount(h)) {
        bool covered = false;
        for (Mask m : b)
            if ((h & m) == m) { covered = true; break; }
        if (covered != fam.contains(h))
            throw std::logic_error("basis up-closure does not reproduce the family; basis computation is broken");
    }
}

} // namespace

SelectedU select_u(const Family& fam, int ell) {
    if (ell < 1 || ell >= fam.k) throw std::invalid_argument("select_u: need 1 <= ell < k");
    require_saturated_intersecting(fam, "select_u");
    const std::vector<Mask> b = basis(fam);
    const int t = covering_number(fam).size;
    if (t < ell + 1) throw std::invalid_argument("select_u: covering number below ell+1");

    int r = -1;
    for (int j = t; j <= fam.k; ++j) {
        if (tau_of(basis_upto(b, j)) >= ell + 1) { r = j; break; }
    }
    if (r < 0) throw std::logic_error("select_u: no level with tau(B^(<=r)) >= ell+1; basis computation is broken");

    const std::vector<Mask> level_r = basis_level(b, r);
    const std::vector<Mask> below = basis_upto(b, r - 1);

    SelectedU sel;
    sel.r = r;
    sel.t = t;
    sel.u_case = (r > t) ? '1' : '2';
    bool found = false;
    std::uint64_t best = 0;
    for (Combinations c(fam.n, ell); !c.done(); c.next()) {
        Mask u = 0;
        for (int i : c.indices()) u |= Mask{1} << i;
        if (sel.u_case == '1') {
            bool transversal = true;
            for (Mask m : below)
                if (!(m & u)) { transversal = false; break; }
            if (!transversal) continue;
        }
        const std::uint64_t v = count_avoiding(level_r, u);
        if (!found || v < best) {
            found = true;
            best = v;
            sel.u = u;
        }
    }
    if (!found) throw std::logic_error("select_u: no candidate ell-set qualifies");
    return sel;
}

namespace {

BranchingCertificate make_certificate(const Family& fam, int ell, Mask u, int t, int r, const std::vector<Mask>& b,
                                      BigInt bound, const std::string& rule) {
    BranchingCertificate cert;
    cert.rule = rule;
    cert.ell = ell;
    cert.t = t;
    cert.r = r;
    cert.u = u;
    cert.bound = std::move(bound);

    const long k = fam.k;
    BigRat sum = 0;
    BigInt integer_route = 0;  // sum_j |B^(j)(U-bar)| k^(k-j), to compare against bound * k^(k-ell-1)
    BigInt kpow_kj;
    for (int j = r; j <= fam.k; ++j) {
        const std::uint64_t c = count_avoiding(basis_level(b, j), u);
        cert.per_level[j] = c;
        BigInt kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j - ell - 1));
        sum += BigRat(c) / BigRat(kp);
        mpz_ui_pow_ui(kpow_kj.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(fam.k - j));
        integer_route += BigInt(static_cast<unsigned long>(c)) * kpow_kj;
    }
    sum.canonicalize();
    cert.weighted_sum = sum;
    BigInt rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(fam.k - ell - 1));
    rhs *= cert.bound;
    const bool holds_int = integer_route <= rhs;
    const bool holds_rat = cert.weighted_sum <= BigRat(cert.bound);
    if (holds_int != holds_rat)
        throw std::logic_error("branching certificate: rational and common-denominator routes disagree");
    cert.holds = holds_rat;
    return cert;
}

} // namespace

BranchingCertificate verify_branching(const Family& fam, int ell) {
    if (ell < 1 || ell >= fam.k) throw std::invalid_argument("verify_branching: need 1 <= ell < k");
    require_saturated_intersecting(fam, "verify_branching");
    const std::vector<Mask> b = basis(fam);
    check_basis_reconstruction(fam, b);
    const int t = covering_number(fam).size;
    if (t < ell + 1) {
        BranchingCertificate cert;
        cert.rule = "general";
        cert.ell = ell;
        cert.t = t;
        cert.applicable = false;
        cert.note = "covering number " + std::to_string(t) + " below ell+1 = " + std::to_string(ell + 1);
        return cert;
    }
    const SelectedU sel = select_u(fam, ell);
    BigInt bound = BigInt(sel.t - 1) * sel.r;
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(sel.r - 1), static_cast<unsigned long>(ell - 1));
    bound *= pw;
    BranchingCertificate cert = make_certificate(fam, ell, sel.u, sel.t, sel.r, b, std::move(bound), "general");
    cert.u_case = sel.u_case;
    return cert;
}

Branching33Report verify_branching_33(const Family& fam) {
    Branching33Report rep;
    require_saturated_intersecting(fam, "verify_branching_33");
    const std::vector<Mask> b = basis(fam);
    check_basis_reconstruction(fam, b);
    const int t = covering_number(fam).size;
    if (t != 4) {
        rep.note = "not applicable: covering number is " + std::to_string(t) + ", needs 4";
        return rep;
    }
    const std::vector<Mask> b4 = basis_level(b, 4);
    if (tau_of(b4) < 3) {
        rep.note = "not applicable: tau of the size-4 basis level is below 3";
        return rep;
    }
    rep.applicable = true;
    rep.holds = true;
    for (Mask b1 : b4) {
        const std::vector<int> vs = mask_vertices(b1);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                const Mask v = (Mask{1} << vs[i]) | (Mask{1} << vs[j]);
                BranchingCertificate cert = make_certificate(fam, 2, v, 4, 4, b, BigInt(24), "t4-pair");
                cert.u_case = 'p';
                if (!cert.holds) rep.holds = false;
                rep.certs.push_back(std::move(cert));
            }
        }
    }
    return rep;
}

BranchTrace simulate_branching(const Family& fam, int ell, std::uint64_t max_sequences) {
    BranchTrace tr;
    tr.sel = select_u(fam, ell);
    const std::vector<Mask> b = basis(fam);
    const std::vector<Mask> upto_r = basis_upto(b, tr.sel.r);
    const std::vector<Mask> level_t = basis_level(b, tr.sel.t);
    const Mask u = tr.sel.u;

    struct Seq {
        Mask set = 0;
        int len = 0;
        BigRat weight;
    };

    // stage 1: expand the lexicographically first size-t basis set meeting U
    Mask b1 = 0;
    for (Mask m : level_t)
        if (m & u) { b1 = m; break; }
    if (!b1) {
        tr.note = "no size-t basis set meets U; trace not applicable";
        return tr;
    }
    std::deque<Seq> work;
    const std::vector<int> b1v = mask_vertices(b1 & ~u);
    for (int x : b1v) work.push_back({Mask{1} << x, 1, BigRat(1, static_cast<unsigned long>(b1v.size()))});

    // stages 2..ell use basis sets of size <= r meeting U; stage ell+1 drops
    // the "meets U" requirement; afterwards any basis set may be used
    std::vector<Seq> done;
    std::uint64_t produced = work.size();
    while (!work.empty()) {
        Seq s = work.front();
        work.pop_front();
        Mask chosen = 0;
        if (s.len < ell) {
            for (Mask m : upto_r)
                if (!(m & s.set) && (m & u)) { chosen = m; break; }
            if (!chosen) {
                tr.note = "stage " + std::to_string(s.len + 1) + ": no qualifying basis set; selection rule violated";
                return tr;
            }
        } else if (s.len == ell) {
            for (Mask m : upto_r)
                if (!(m & s.set)) { chosen = m; break; }
            if (!chosen) {
                tr.note = "stage ell+1: no basis set of size <= r disjoint from the sequence";
                return tr;
            }
        } else {
            for (Mask m : b)
                if (!(m & s.set)) { chosen = m; break; }
            if (!chosen) {  // sequence survives
                done.push_back(s);
                continue;
            }
            if (s.len == fam.k) {
                if (!fam.contains(s.set)) continue;  // discard
                tr.note = "length-k member sequence missed by the basis; basis computation is broken";
                return tr;
            }
        }
        const std::vector<int> ys = mask_vertices(chosen & ~u);
        if (ys.empty()) {
            tr.note = "selected basis set lies inside U; cannot expand";
            return tr;
        }
        produced += ys.size();
        if (produced > max_sequences) {
            tr.note = "sequence budget exceeded";
            return tr;
        }
        for (int y : ys) {
            if (s.set >> y & 1) continue;
            work.push_back({s.set | (Mask{1} << y), s.len + 1, s.weight / BigRat(static_cast<unsigned long>(ys.size()))});
        }
    }

    tr.ran = true;
    tr.total_weight = 0;
    for (const Seq& s : done) {
        ++tr.survivors_per_length[s.len];
        tr.total_weight += s.weight;
    }
    tr.total_weight.canonicalize();
    tr.weight_at_most_one = tr.total_weight <= 1;

    tr.covers_basis_restriction = true;
    for (int j = tr.sel.r; j <= fam.k; ++j) {
        for (Mask m : basis_level(b, j)) {
            if (m & u) continue;
            bool found = false;
            for (const Seq& s : done)
                if (s.set == m) { found = true; break; }
            if (!found) tr.covers_basis_restriction = false;
        }
    }

    BigRat floor_weight(1);
    {
        BigInt denom = BigInt(tr.sel.t - 1) * tr.sel.r;
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(tr.sel.r - 1), static_cast<unsigned long>(ell - 1));
        denom *= pw;
        floor_weight = BigRat(1) / BigRat(denom);
    }
    tr.per_sequence_weight_ok = true;
    for (const Seq& s : done) {
        if (s.len < ell + 1) continue;
        BigInt kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(fam.k), static_cast<unsigned long>(s.len - ell - 1));
        if (s.weight < floor_weight / BigRat(kp)) tr.per_sequence_weight_ok = false;
    }
    return tr;
}

} // namespace divlab
