#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hybrix/formula.hpp"

namespace hybrix {

// World sets are bitmasks over world indices (≤ 16 worlds).
using WorldSet = std::uint32_t;

// ── Kripke models ───────────────────────────────────────────────────────────

struct KripkeModel {
    std::vector<std::string> worlds;            // names; index = bit position
    std::vector<WorldSet> successors;           // successors[w] = {v | wRv}
    std::map<std::string, WorldSet> valuation;  // PROP ∪ NOM → world set

    int world_index(const std::string& name) const;
    WorldSet all_worlds() const {
        return static_cast<WorldSet>((std::uint64_t(1) << worlds.size()) - 1);
    }
};

KripkeModel make_model(std::vector<std::string> worlds,
                       std::vector<std::pair<std::string, std::string>> relation,
                       std::map<std::string, WorldSet> valuation);

bool satisfies(const KripkeModel& m, int world, const FormulaPtr& f);
bool satisfies(const KripkeModel& m, const std::string& world, const FormulaPtr& f);

// ── Two-sorted general frames ───────────────────────────────────────────────
// (W, R, A, B): A a non-empty family closed under intersection, relative
// complement and ⟨R⟩; B non-empty with {w} ∈ A for every w ∈ B.

struct TwoSortedGeneralFrame {
    std::vector<std::string> worlds;
    std::vector<WorldSet> successors;
    std::vector<WorldSet> admissible;  // sorted, unique
    WorldSet points = 0;               // B

    WorldSet all_worlds() const {
        return static_cast<WorldSet>((std::uint64_t(1) << worlds.size()) - 1);
    }
    WorldSet diamond_R(WorldSet a) const;  // ⟨R⟩a = {w | ∃v ∈ a, wRv}
    bool admits(WorldSet a) const;
};

// Validates all invariants; throws NotClosed / FrameInvariantError.
TwoSortedGeneralFrame make_frame(std::vector<std::string> worlds,
                                 std::vector<std::pair<std::string, std::string>> relation,
                                 std::vector<WorldSet> admissible, WorldSet points);
TwoSortedGeneralFrame make_powerset_frame(
    std::vector<std::string> worlds,
    std::vector<std::pair<std::string, std::string>> relation, WorldSet points);

// Validity under every admissible valuation of the symbols occurring in f
// (props range over A, nominals over {{w} | w ∈ B}).
bool frame_validates(const TwoSortedGeneralFrame& g, const FormulaPtr& f);

bool is_differentiated(const TwoSortedGeneralFrame& g);
bool is_tight(const TwoSortedGeneralFrame& g);
bool is_compact(const TwoSortedGeneralFrame& g);
bool is_descriptive(const TwoSortedGeneralFrame& g);
bool is_strongly_descriptive(const TwoSortedGeneralFrame& g);

// World bijection preserving R, A and B, if one exists.
std::optional<std::vector<int>> frame_isomorphic(const TwoSortedGeneralFrame& a,
                                                 const TwoSortedGeneralFrame& b);

}  // namespace hybrix
