#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lcs.hpp"
#include "solver.hpp"
#include "strand.hpp"

namespace hp {

/// The fixed gadget constants. The correctness lemmas depend on these exact
/// Fibonacci-regular values, so they are compile-time data, not parameters.
struct GadgetConstants {
    std::array<int64_t, 3> iota{55, 54, 53};
    int64_t p = 144;
    std::array<int64_t, 3> D{57, 56, 55};
    std::array<int64_t, 3> D_sync{31, 29, 27};
    int64_t B = 83;
};

/// Gadget strands. Right-side I and P gadgets are reverse complements of
/// their left counterparts; the Sync gadgets are not symmetric.
Strand info_left(int alpha);       // (010^{3+2a})^{iota_a}
Strand info_right(int alpha);
Strand protector_left();           // (010^9)^144
Strand protector_right();
Strand sync_left();                // 01
Strand sync_right();               // 101
Strand mega_left(int alpha);       // P_L . Sync_L . I_L(a) . Sync_L
Strand mega_right(int alpha);      // Sync_R . I_R(a) . Sync_R . P_R
Strand y_core();                   // P_L . Sync_L . 01 . 1100 . 01 . Sync_R . P_R

struct ReductionInstance {
    std::string S, T;              // ternary inputs, plain {0,1,2} text
    Strand x, y;                   // binary gadget strings
    std::vector<int64_t> leftP;    // [|S|+1] leftmost index of each P_L, 1-based
    std::vector<int64_t> rightP;   // [|T|+1] rightmost index of each P_R
    std::vector<int64_t> leftI;    // [|S|]
    std::vector<int64_t> rightI;   // [|T|]
    GadgetConstants constants;

    /// Start index of the unique y occurrence: leftP[|S|+1].
    int64_t y_begin() const { return leftP.back(); }
    int64_t y_end() const { return rightP.back(); }
    /// The "never delete y" search window.
    PruneWindow window() const { return {y_begin(), y_end()}; }
    /// Corner state x[leftP[l] .. rightP[r]], l and r 1-based.
    SubstringState corner(int64_t l, int64_t r) const {
        return {leftP[l - 1], rightP[r - 1]};
    }
};

/// Builds x, y and the index tables; verifies the structural invariants
/// (unique y occurrence, table consistency) on construction.
ReductionInstance build_reduction(const std::string& S, const std::string& T);

/// The closed form sum_a D(a)(#a(S)+#a(T)) - LCS(S,T) * B.
int64_t predicted_hdd(const std::string& S, const std::string& T);

/// Inverse of the predictor; throws NonIntegralResult when hdd_value is
/// inconsistent with the closed form.
int64_t lcs_from_hdd(const std::string& S, const std::string& T, int64_t hdd_value);

/// Constructive deletion path from x to y that advances corner-to-corner,
/// matching the given LCS witness; total length is exactly predicted_hdd(S,T).
/// Throws WitnessInvalid if w is not a valid LCS witness for (S, T).
std::vector<DeletionStep> build_well_behaved_witness(const ReductionInstance& inst,
                                                     const LcsWitness& w);

/// Replays the path from x and checks the corner-successor condition for
/// every visited corner state. Throws ReplayFailed if the path does not
/// replay from x to y.
bool check_well_behaved(const ReductionInstance& inst, std::span<const DeletionStep> path);

}  // namespace hp
