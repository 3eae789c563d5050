#pragma once

#include <string>
#include <vector>

#include "tsvf/qcore.hpp"
#include "tsvf/two_state.hpp"

namespace tsvf {

/// A named pre/post pair from the catalog.
///
/// States are stored in the basis they are naturally written in: box-
/// language entries (hardy, n-boxes, ghz-boxes after its spin-to-box
/// conversion) use the convention box A = bit 0; spin-language entries
/// keep the spin-z computational basis. `box_maps[k]` converts the
/// storage basis of site k into its box basis (rows = <A|, <B|) and is
/// the identity wherever storage already is box-labeled; observables
/// named PA/PB are built through it, so a spin-stored entry like epr
/// gets its spatial dichotomic reading without re-writing the state.
struct CatalogEntry {
    std::string name;
    int n_sites = 0;
    StateVector pre;
    StateVector post;
    std::vector<SiteUnitary> box_maps;
    std::vector<std::string> site_labels;

    TwoStateVector tsv() const { return {pre, post}; }
};

// Spin-to-box dictionaries. Rows are the bras of the box states in the
// spin-z basis.
SiteUnitary y_box_map();  // A = up_y, B = down_y
SiteUnitary x_box_map();  // A = up_x, B = down_x

/// (prod |up_z> + prod |down_z>)/sqrt(2) over N >= 2 sites.
StateVector ghz_pre(int n);

/// prod |up_x>: every amplitude 2^(-N/2).
StateVector all_up_x_post(int n);

/// ghz_pre / all_up_x_post converted site-by-site into box labels
/// (A = up_y), so box projectors act directly on the stored amplitudes.
CatalogEntry ghz_boxes_pair(int n);

/// pre (|AB>+|BA>+|BB>)/sqrt(3), post (|A>-|B>)(|A>-|B>)/2.
CatalogEntry hardy_pair();

/// The non-entangled preparation (|A>+|B>)(|A>+|B>)/2; projecting out
/// |AA> and renormalizing reproduces hardy_pair().pre.
StateVector hardy_projection_prep();

/// pre [(N-1) prod|B> + sum_n |A>_n prod_{j!=n}|B>_j]/sqrt(N^2-N+1),
/// post prod(|A>-|B>)/sqrt(2^N). Reduces to hardy_pair at N=2.
CatalogEntry n_box_pair(int n);

/// Singlet pre, |up_x>|up_z> post; box dictionaries A=up_z on particle 1
/// and A=up_x on particle 2.
CatalogEntry epr_pair();

/// One particle with a spatial site (0) and a spin site (1):
/// pre (|A>|down_z> - |B>|up_z>)/sqrt(2), post (|A>+|B>)|up_z>/sqrt(2).
CatalogEntry single_particle_pair();

/// The two-term generalized two-state vector with alpha_1 = alpha_2 = 1,
/// stored unnormalized exactly as written.
GeneralizedTwoStateVector generalized_tsv_catalog();

/// Names addressable through the CLI.
std::vector<std::string> catalog_names();

/// Looks up a pre/post entry by name; parameterized families take n.
/// "generalized-tsv" is not a plain pair and is rejected here.
CatalogEntry catalog_entry(const std::string& name, int n = 3);

}  // namespace tsvf
