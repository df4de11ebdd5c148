#ifndef DKP_ERRORS_HPP
#define DKP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dkp {

/// Base class for all domain errors. `code()` is stable and machine-readable;
/// `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& w) : Error("DimensionMismatch", w) {}
};

struct NonPositiveAlpha2 : Error {
    explicit NonPositiveAlpha2(const std::string& w) : Error("NonPositiveAlpha2", w) {}
};

struct DegenerateProblem : Error {
    explicit DegenerateProblem(const std::string& w) : Error("DegenerateProblem", w) {}
};

struct QuantizationMismatch : Error {
    explicit QuantizationMismatch(const std::string& w) : Error("QuantizationMismatch", w) {}
};

struct EnergyAtMass : Error {
    explicit EnergyAtMass(const std::string& w) : Error("EnergyAtMass", w) {}
};

struct NullCharge : Error {
    explicit NullCharge(const std::string& w) : Error("NullCharge", w) {}
};

struct GridTooCoarse : Error {
    explicit GridTooCoarse(const std::string& w) : Error("GridTooCoarse", w) {}
};

struct AboveThreshold : Error {
    explicit AboveThreshold(const std::string& w) : Error("AboveThreshold", w) {}
};

struct ZeroGap : Error {
    explicit ZeroGap(const std::string& w) : Error("ZeroGap", w) {}
};

} // namespace dkp

#endif
