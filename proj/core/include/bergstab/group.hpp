#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bergstab/moebius.hpp"
#include "bergstab/words.hpp"

namespace bergstab {

/// A finitely generated Fuchsian group given by generator matrices.
/// Freeness/discreteness and convergence type are asserted by the user,
/// not verified.
struct GroupSpec {
    Model model = Model::disc;
    std::vector<MoebiusMap> generators;
    bool asserted_free_discrete = false;
    bool asserted_convergence_type = false;

    int rank() const { return static_cast<int>(generators.size()); }

    void validate() const;

    /// Cayley-conjugated copy with disc-model generators (no-op for disc).
    GroupSpec to_disc() const;
};

enum class TowerKind { cyclic_powers, abelian_mod };
enum class TowerTop { trivial, commutator };

/// Nested normal subgroups Gamma_1 > Gamma_2 > ... defined by membership
/// predicates, with schedule m_1 | m_2 | ... .
///  - cyclic_powers (rank 1): Gamma_j = <gamma^{m_j}>.
///  - abelian_mod: Gamma_j = kernel of the exponent-sum map mod m_j.
/// `top` names the intersection: trivial subgroup or the commutator
/// subgroup (infinite index).
struct TowerSpec {
    TowerKind kind = TowerKind::cyclic_powers;
    std::vector<long long> schedule;
    TowerTop top = TowerTop::trivial;

    int levels() const { return static_cast<int>(schedule.size()); }
    void validate(int rank) const;
};

/// Subgroup index; absent value means infinite.
using TowerIndex = std::optional<unsigned long long>;

bool tower_member(const TowerSpec& t, int j, const Word& w, int rank);
bool top_member(const TowerSpec& t, const Word& w, int rank);
TowerIndex tower_index(const TowerSpec& t, int j, int rank);

/// Normal-subgroup indicator used to filter enumerated group elements.
/// `identity_only` marks predicates whose subgroup is exactly {id}, for
/// which truncated orbit sums are complete and carry no tail.
struct MembershipPredicate {
    std::string label;
    std::function<bool(const Word&)> contains;
    bool identity_only = false;

    bool operator()(const Word& w) const { return contains(w); }
};

MembershipPredicate full_group_predicate();
MembershipPredicate level_predicate(const TowerSpec& t, int j, int rank);
MembershipPredicate top_predicate(const TowerSpec& t, int rank);
MembershipPredicate identity_only_predicate();

} // namespace bergstab
