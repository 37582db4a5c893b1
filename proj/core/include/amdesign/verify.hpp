#pragma once

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "amdesign/designs.hpp"
#include "amdesign/gf2.hpp"

namespace amdesign::verify {

using Json = nlohmann::ordered_json;

/// Outcome of one scenario. Exact values (lambdas, counts, rationals) are
/// serialized as strings; timings never take part in comparisons.
struct VerificationReport {
    std::string scenario;
    bool pass = false;
    Json witnesses = Json::object();
    double timing_ms = 0;

    Json to_json() const;
    static VerificationReport from_json(const Json& j);

    friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
        return a.scenario == b.scenario && a.pass == b.pass && a.witnesses == b.witnesses;
    }
};

struct StrengthProfile {
    /// Strength of each support design C_w, 0 < w < n, A_w > 0.
    std::map<int, int> per_weight;
    int delta = 0;
    int s = 0;
};

StrengthProfile strength_profile(const BinaryCode& c, int t_cap);
Json to_json(const StrengthProfile& p);

/// Evaluates the classical Assmus-Mattson hypothesis for strength t and, when
/// it holds, confirms every promised support design by counting.
/// Requires t < d.
VerificationReport assmus_mattson_check(const BinaryCode& c, int t);

/// Every support design of a near-extremal Type I code (or every union
/// C_w + C^perp_w of a near-extremal even formally self-dual code) of length
/// 0 mod 8 is a 1-design. Checked by counting and, independently, by the
/// vanishing of all degree-1 harmonic weight enumerators.
VerificationReport verify_support_one_designs(const BinaryCode& c);

/// For the near-extremal Type I [16,8,4] code: C_6 is a 2-(16,6,8) design
/// (counting and harmonic criterion), C_10 is its complement, and the
/// strength profile has delta = 1 < s = 2 with the gap exactly at {6, 10}.
VerificationReport verify_type_one_16(const BinaryCode& c);

/// For a near-extremal even formally self-dual code of length 16:
/// C_w + C^perp_w is a 2-design for w = 6 and 10. Length 64 is gated behind a
/// GuardError because full enumeration of 2^32 codewords is out of budget.
VerificationReport verify_fsd_union_two_designs(const BinaryCode& c);

/// Builds the code of a self-orthogonal 2-(16,6,8) design and checks, step by
/// step, that it is the near-extremal Type I [16,8,4] code whose weight-6
/// support design is the input.
VerificationReport verify_design_pipeline(const Design& d);

/// Doubly-even subcode C_0 of the Type I [16,8,4] code: parameters of C_0 and
/// its dual, and support-design strengths exceeding the Assmus-Mattson
/// guarantee t = 1 at weights 6 and 10 of the dual.
VerificationReport verify_doubly_even_subcode(const BinaryCode& c);

/// Counting check that `d` is a t-design, optionally with a required lambda.
/// Failure witnesses name two t-subsets with different counts.
VerificationReport verify_t_design(const Design& d, int t, std::optional<std::uint64_t> lambda = std::nullopt);

}  // namespace amdesign::verify
