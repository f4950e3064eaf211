#pragma once

#include <limits>
#include <stdexcept>

namespace infolab {

// Nonnegative real with an explicit +infinity variant. Divergences return
// this instead of letting a floating-point infinity leak through arithmetic,
// so callers must handle the support-violation case deliberately.
class ExtendedReal {
public:
    ExtendedReal() : value_(0.0), infinite_(false) {}
    ExtendedReal(double value) : value_(value), infinite_(false) {}

    static ExtendedReal infinity() {
        ExtendedReal r;
        r.infinite_ = true;
        return r;
    }

    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !infinite_; }

    // Finite value; throws if infinite.
    double value() const {
        if (infinite_) throw std::logic_error("ExtendedReal: value() on +infinity");
        return value_;
    }

    // Collapse to double, mapping the infinite variant to +inf.
    double to_double() const noexcept {
        return infinite_ ? std::numeric_limits<double>::infinity() : value_;
    }

    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) noexcept {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }

private:
    double value_;
    bool infinite_;
};

enum class LogBase { nats, bits };

// Multiplier converting a natural-log value into the given base.
double base_scale(LogBase base) noexcept;
const char* base_name(LogBase base) noexcept;

} // namespace infolab
