#include "bergstab/group.hpp"

#include <cmath>

#include "bergstab/errors.hpp"

namespace bergstab {

void GroupSpec::validate() const {
    if (generators.empty())
        throw ConfigError("group must have at least one generator");
    for (const MoebiusMap& g : generators) {
        if (g.model() != model)
            throw ConfigError("generator model does not match group model");
        if (g.is_identity())
            throw ConfigError("identity is not a valid generator");
    }
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (generators[i].same_map(generators[j]))
                throw ConfigError("generators must be pairwise distinct (up to sign)");
}

GroupSpec GroupSpec::to_disc() const {
    if (model == Model::disc) return *this;
    GroupSpec g = *this;
    g.model = Model::disc;
    g.generators.clear();
    for (const MoebiusMap& m : generators)
        g.generators.push_back(cayley_map_to_disc(m));
    return g;
}

void TowerSpec::validate(int rank) const {
    if (schedule.empty()) throw ConfigError("tower schedule must be nonempty");
    if (kind == TowerKind::cyclic_powers && rank != 1)
        throw ConfigError("cyclic_powers tower requires a rank-1 group");
    long long prev = 0;
    for (long long m : schedule) {
        if (m <= 0) throw ConfigError("tower schedule entries must be positive");
        if (prev != 0) {
            if (m <= prev) throw ConfigError("tower schedule must be strictly increasing");
            if (m % prev != 0)
                throw ConfigError("tower schedule must be a divisibility chain");
        }
        prev = m;
    }
}

namespace {

void check_level(const TowerSpec& t, int j) {
    if (j < 1 || j > t.levels())
        throw ConfigError("tower level " + std::to_string(j) + " out of range [1, " +
                          std::to_string(t.levels()) + "]");
}

bool abelianization_zero_mod(const Word& w, int rank, long long m) {
    for (long long s : abelianization(w, rank))
        if (((s % m) + m) % m != 0) return false;
    return true;
}

} // namespace

bool tower_member(const TowerSpec& t, int j, const Word& w, int rank) {
    check_level(t, j);
    long long m = t.schedule[static_cast<std::size_t>(j - 1)];
    if (t.kind == TowerKind::cyclic_powers) {
        long long e = abelianization(w, rank)[0];
        return e % m == 0;
    }
    return abelianization_zero_mod(w, rank, m);
}

bool top_member(const TowerSpec& t, const Word& w, int rank) {
    if (t.top == TowerTop::trivial) return w.empty();
    for (long long s : abelianization(w, rank))
        if (s != 0) return false;
    return true;
}

TowerIndex tower_index(const TowerSpec& t, int j, int rank) {
    check_level(t, j);
    unsigned long long m =
        static_cast<unsigned long long>(t.schedule[static_cast<std::size_t>(j - 1)]);
    if (t.kind == TowerKind::cyclic_powers) return m;
    unsigned long long idx = 1;
    for (int i = 0; i < rank; ++i) {
        if (idx > (~0ull) / m) throw NumericError("tower index overflows 64 bits");
        idx *= m;
    }
    return idx;
}

MembershipPredicate full_group_predicate() {
    return {"base", [](const Word&) { return true; }};
}

MembershipPredicate level_predicate(const TowerSpec& t, int j, int rank) {
    check_level(t, j);
    TowerSpec copy = t;
    return {"level-" + std::to_string(j),
            [copy, j, rank](const Word& w) { return tower_member(copy, j, w, rank); }};
}

MembershipPredicate top_predicate(const TowerSpec& t, int rank) {
    TowerSpec copy = t;
    std::string label = t.top == TowerTop::trivial ? "top-trivial" : "top-commutator";
    // The rank-1 commutator subgroup is also trivial.
    bool only_identity = t.top == TowerTop::trivial || rank == 1;
    return {label, [copy, rank](const Word& w) { return top_member(copy, w, rank); },
            only_identity};
}

MembershipPredicate identity_only_predicate() {
    return {"identity", [](const Word& w) { return w.empty(); }, true};
}

} // namespace bergstab
