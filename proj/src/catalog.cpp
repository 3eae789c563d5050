#include "tsvf/catalog.hpp"

#include <cmath>
#include <utility>

namespace tsvf {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::size_t bit_reverse(std::size_t value, int bits) {
    std::size_t out = 0;
    for (int k = 0; k < bits; ++k) {
        out = (out << 1) | ((value >> k) & 1);
    }
    return out;
}

// Global phase convention for catalog states: the first nonzero amplitude
// in bitstring order (site 0 read first, i.e. bit-reversed index order) is
// made real and positive.
void canonicalize_phase(StateVector& s) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
        const cplx a = s.amps[bit_reverse(j, s.n_sites)];
        if (std::abs(a) > 1e-12) {
            const cplx factor = std::conj(a) / std::abs(a);
            for (cplx& amp : s.amps) amp *= factor;
            return;
        }
    }
}

std::vector<SiteUnitary> identity_maps(int n) { return std::vector<SiteUnitary>(n, kIdentityMap); }

}  // namespace

SiteUnitary y_box_map() {
    return {cplx{kInvSqrt2, 0}, cplx{0, -kInvSqrt2}, cplx{kInvSqrt2, 0}, cplx{0, kInvSqrt2}};
}

SiteUnitary x_box_map() {
    return {cplx{kInvSqrt2, 0}, cplx{kInvSqrt2, 0}, cplx{kInvSqrt2, 0}, cplx{-kInvSqrt2, 0}};
}

StateVector ghz_pre(int n) {
    if (n < 2) throw BadN("ghz_pre needs N >= 2");
    return make_state(n, {{std::size_t{0}, cplx{1, 0}}, {(std::size_t{1} << n) - 1, cplx{1, 0}}});
}

StateVector all_up_x_post(int n) {
    if (n < 1) throw BadN("all_up_x_post needs N >= 1");
    std::vector<std::pair<std::size_t, cplx>> entries;
    for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
        entries.emplace_back(i, cplx{1, 0});
    }
    return make_state(n, entries);
}

CatalogEntry ghz_boxes_pair(int n) {
    StateVector pre = ghz_pre(n);
    StateVector post = all_up_x_post(n);
    for (int site = 0; site < n; ++site) {
        pre = site_basis_change(pre, site, y_box_map());
        post = site_basis_change(post, site, y_box_map());
    }
    canonicalize_phase(pre);
    canonicalize_phase(post);

    CatalogEntry entry;
    entry.name = "ghz-boxes";
    entry.n_sites = n;
    entry.pre = std::move(pre);
    entry.post = std::move(post);
    entry.box_maps = identity_maps(n);
    entry.site_labels.assign(n, "box (A = up_y)");
    return entry;
}

CatalogEntry hardy_pair() {
    CatalogEntry entry;
    entry.name = "hardy";
    entry.n_sites = 2;
    entry.pre = make_state(
        2, {{std::size_t{1}, cplx{1, 0}}, {std::size_t{2}, cplx{1, 0}}, {std::size_t{3}, cplx{1, 0}}});
    entry.post = make_state(2, {{std::size_t{0}, cplx{1, 0}},
                                {std::size_t{1}, cplx{-1, 0}},
                                {std::size_t{2}, cplx{-1, 0}},
                                {std::size_t{3}, cplx{1, 0}}});
    canonicalize_phase(entry.pre);
    canonicalize_phase(entry.post);
    entry.box_maps = identity_maps(2);
    entry.site_labels.assign(2, "box");
    return entry;
}

StateVector hardy_projection_prep() {
    StateVector s = make_state(2, {{std::size_t{0}, cplx{1, 0}},
                                   {std::size_t{1}, cplx{1, 0}},
                                   {std::size_t{2}, cplx{1, 0}},
                                   {std::size_t{3}, cplx{1, 0}}});
    canonicalize_phase(s);
    return s;
}

CatalogEntry n_box_pair(int n) {
    if (n < 2) throw BadN("n_box_pair needs N >= 2");

    const std::size_t all_b = (std::size_t{1} << n) - 1;
    std::vector<std::pair<std::size_t, cplx>> pre_entries;
    pre_entries.emplace_back(all_b, cplx{double(n - 1), 0});
    for (int site = 0; site < n; ++site) {
        pre_entries.emplace_back(all_b ^ (std::size_t{1} << site), cplx{1, 0});
    }

    std::vector<std::pair<std::size_t, cplx>> post_entries;
    for (std::size_t i = 0; i <= all_b; ++i) {
        const int b_count = __builtin_popcountll(i);
        post_entries.emplace_back(i, cplx{(b_count % 2 == 0) ? 1.0 : -1.0, 0});
    }

    CatalogEntry entry;
    entry.name = "n-boxes";
    entry.n_sites = n;
    entry.pre = make_state(n, pre_entries);
    entry.post = make_state(n, post_entries);
    canonicalize_phase(entry.pre);
    canonicalize_phase(entry.post);
    entry.box_maps = identity_maps(n);
    entry.site_labels.assign(n, "box");
    return entry;
}

CatalogEntry epr_pair() {
    CatalogEntry entry;
    entry.name = "epr";
    entry.n_sites = 2;
    // Singlet; site 0 is particle 1. |up down> is index 2, |down up> index 1.
    entry.pre = make_state(2, {{std::size_t{2}, cplx{1, 0}}, {std::size_t{1}, cplx{-1, 0}}});
    entry.post = make_state(2, {{std::size_t{0}, cplx{1, 0}}, {std::size_t{1}, cplx{1, 0}}});
    canonicalize_phase(entry.pre);
    canonicalize_phase(entry.post);
    entry.box_maps = {kIdentityMap, x_box_map()};
    entry.site_labels = {"spin (A = up_z)", "spin (A = up_x)"};
    return entry;
}

CatalogEntry single_particle_pair() {
    CatalogEntry entry;
    entry.name = "single-particle";
    entry.n_sites = 2;
    // Site 0 = spatial box, site 1 = spin. |A down> is index 2, |B up> index 1.
    entry.pre = make_state(2, {{std::size_t{2}, cplx{1, 0}}, {std::size_t{1}, cplx{-1, 0}}});
    entry.post = make_state(2, {{std::size_t{0}, cplx{1, 0}}, {std::size_t{1}, cplx{1, 0}}});
    canonicalize_phase(entry.pre);
    canonicalize_phase(entry.post);
    entry.box_maps = identity_maps(2);
    entry.site_labels = {"box", "spin"};
    return entry;
}

GeneralizedTwoStateVector generalized_tsv_catalog() {
    // Site 0 = spatial box, site 1 = spin, amplitudes exactly as written.
    const auto raw = [](std::vector<std::pair<std::size_t, cplx>> entries) {
        StateVector s;
        s.n_sites = 2;
        s.amps.assign(4, cplx{0, 0});
        for (const auto& [idx, amp] : entries) s.amps[idx] = amp;
        return s;
    };

    GeneralizedTwoStateVector gtsv;
    GeneralizedTerm t1;
    t1.alpha = cplx{1, 0};
    t1.post = raw({{0, cplx{1, 0}}, {1, cplx{1, 0}}});  // (|A>+|B>)|up>
    t1.pre = raw({{2, cplx{1, 0}}, {1, cplx{1, 0}}});   // |A>|down> + |B>|up>
    GeneralizedTerm t2;
    t2.alpha = cplx{1, 0};
    t2.post = raw({{2, cplx{1, 0}}, {3, cplx{1, 0}}});  // (|A>+|B>)|down>
    t2.pre = raw({{0, cplx{1, 0}}, {3, cplx{1, 0}}});   // |A>|up> + |B>|down>
    gtsv.terms = {std::move(t1), std::move(t2)};
    return gtsv;
}

std::vector<std::string> catalog_names() {
    return {"ghz-boxes", "hardy", "n-boxes", "epr", "single-particle", "generalized-tsv"};
}

CatalogEntry catalog_entry(const std::string& name, int n) {
    if (name == "ghz-boxes") return ghz_boxes_pair(n);
    if (name == "hardy") return hardy_pair();
    if (name == "n-boxes") return n_box_pair(n);
    if (name == "epr") return epr_pair();
    if (name == "single-particle") return single_particle_pair();
    if (name == "generalized-tsv") {
        throw UnknownScenario("generalized-tsv is a generalized two-state vector; use generalized_tsv_catalog()");
    }
    throw UnknownScenario("unknown catalog entry: " + name);
}

}  // namespace tsvf
