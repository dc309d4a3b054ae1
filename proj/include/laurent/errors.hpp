#pragma once

#include <stdexcept>
#include <string>

namespace laurent {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonInvertible : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct WeightError : Error {
    int lhs_weight2, rhs_weight2;
    WeightError(int lw2, int rw2)
        : Error("weight mismatch: " + fmt_half(lw2) + " vs " + fmt_half(rw2)),
          lhs_weight2(lw2), rhs_weight2(rw2) {}
    static std::string fmt_half(int w2) {
        if (w2 % 2 == 0) return std::to_string(w2 / 2);
        return std::to_string(w2) + "/2";
    }
};
struct ArgumentError : Error { using Error::Error; };
struct UnitMismatch : Error { using Error::Error; };
struct InsufficientCoverage : Error { using Error::Error; };
struct PoleOrderMismatch : Error { using Error::Error; };
struct EvaluationPole : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };
struct InvalidAction : Error { using Error::Error; };
struct ContourUnreliable : Error { using Error::Error; };
struct PrecisionLoss : Error { using Error::Error; };
struct WeightBookkeeping : Error { using Error::Error; };
struct ExpressionNotLevelOne : Error { using Error::Error; };

struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

} // namespace laurent
