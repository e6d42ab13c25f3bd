#pragma once

#include <stdexcept>
#include <string>

namespace hgc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define HGC_ERROR(Name)                                                   \
    struct Name : Error {                                                 \
        using Error::Error;                                               \
        const char* kind() const noexcept override { return #Name; }      \
    };

HGC_ERROR(InvalidDegree)
HGC_ERROR(InvalidArgument)
HGC_ERROR(SingularMap)
HGC_ERROR(NotApplicable)
HGC_ERROR(NoExponent)
HGC_ERROR(PoleInParameters)
HGC_ERROR(AsymptoticOnly)
HGC_ERROR(DomainError)
HGC_ERROR(BranchCut)
HGC_ERROR(PoleError)
HGC_ERROR(NoOrthogonalityInterval)

#undef HGC_ERROR

// Carries the best estimate reached before giving up.
struct NoConvergence : Error {
    double best = 0.0;
    NoConvergence(const std::string& what, double best_estimate = 0.0)
        : Error(what), best(best_estimate) {}
    const char* kind() const noexcept override { return "NoConvergence"; }
};

} // namespace hgc
