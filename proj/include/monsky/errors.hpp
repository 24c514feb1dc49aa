#pragma once

#include <stdexcept>
#include <string>

namespace monsky {

/// Base of every domain error raised by the library. `name()` is the stable
/// identifier printed by the CLI on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string &what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string &name() const noexcept { return name_; }

private:
    std::string name_;
};

#define MONSKY_DEFINE_ERROR(Type)                                              \
    class Type : public Error {                                                \
    public:                                                                    \
        explicit Type(const std::string &what) : Error(#Type, what) {}         \
    }

// cli-io
MONSKY_DEFINE_ERROR(SchemaError);
MONSKY_DEFINE_ERROR(DuplicateId);
// core-model
MONSKY_DEFINE_ERROR(InvalidTriangulation);
MONSKY_DEFINE_ERROR(NotADissection);
// order
MONSKY_DEFINE_ERROR(NotDrawingOrder);
MONSKY_DEFINE_ERROR(Reducible);
MONSKY_DEFINE_ERROR(PeelingStuck);
// param
MONSKY_DEFINE_ERROR(IdenticallyParallel);
MONSKY_DEFINE_ERROR(DenominatorVanishes);
MONSKY_DEFINE_ERROR(DrawabilityUndecided);
// areapoly
MONSKY_DEFINE_ERROR(NotHyper);
MONSKY_DEFINE_ERROR(NotDrawable);
MONSKY_DEFINE_ERROR(VerificationFailed);
// monsky
MONSKY_DEFINE_ERROR(NotMod2);
MONSKY_DEFINE_ERROR(NotHomogeneous);
// valuation
MONSKY_DEFINE_ERROR(DegenerateFrame);
// exact-algebra
MONSKY_DEFINE_ERROR(AlgebraError);

#undef MONSKY_DEFINE_ERROR

} // namespace monsky
