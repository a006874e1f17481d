#include "djc/structures.hpp"

#include "djc/linkage.hpp"
#include "djc/transversal.hpp"
#include "djc/traversal.hpp"

#include <stdexcept>

namespace djc {

std::string to_string(Family f) {
    switch (f) {
        case Family::Vault:
            return "vault";
        case Family::Multiwheel:
            return "multiwheel";
        case Family::Trivault:
            return "trivault";
        case Family::None:
            break;
    }
    return "none";
}

Classification recognize_family(const Digraph& d) {
    Classification out;
    if (auto v = recognize_vault(d)) {
        out.family = Family::Vault;
        if (auto niche = vault_niche(d, *v)) {
            out.has_niche = true;
            out.niche_certificate = vault_niche_certificate(d, *v, *niche);
        }
        out.vault = std::move(v);
        return out;
    }
    if (auto m = recognize_multiwheel(d)) {
        out.family = Family::Multiwheel;
        out.multiwheel = std::move(m);
        return out;
    }
    if (auto t = recognize_trivault(d)) {
        out.family = Family::Trivault;
        if (trivault_niche(d, *t)) {
            out.has_niche = true;
            out.niche_certificate = trivault_niche_certificate(d, *t);
        }
        out.trivault = std::move(t);
    }
    return out;
}

Classification classify_strong_no_instance(const Digraph& d) {
    if (d.vertex_count() == 0 || strong_components(d).members.size() != 1) {
        throw std::invalid_argument("digraph is not strongly connected");
    }
    TauInfo tau = compute_tau_capped(d);
    if (tau.tau != TauClass::Two) {
        throw std::invalid_argument("transversal number is not 2");
    }
    if (!is_intercyclic(d, tau).intercyclic) {
        throw std::invalid_argument("digraph has two disjoint dicycles");
    }
    return recognize_family(d);
}

}  // namespace djc
