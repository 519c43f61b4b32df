/**
 * Exception types shared across the library. Each names the contract it
 * guards; all derive from std::runtime_error so callers can catch broadly.
 */

#ifndef LVMB_ERRORS_HPP
#define LVMB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lvmb {

#define LVMB_DEFINE_ERROR(NAME)                                          \
    class NAME : public std::runtime_error {                             \
      public:                                                            \
        explicit NAME(const std::string& what = #NAME)                   \
            : std::runtime_error(what) {}                                \
    }

LVMB_DEFINE_ERROR(DimensionMismatch);
LVMB_DEFINE_ERROR(RankDeficient);
LVMB_DEFINE_ERROR(EmptyComplex);
LVMB_DEFINE_ERROR(NotPure);
LVMB_DEFINE_ERROR(SEUViolated);
LVMB_DEFINE_ERROR(DegenerateType);
LVMB_DEFINE_ERROR(NotFullDimensional);
LVMB_DEFINE_ERROR(InternalInconsistency);
LVMB_DEFINE_ERROR(NotGoodSystem);
LVMB_DEFINE_ERROR(SiegelViolated);
LVMB_DEFINE_ERROR(CollapsedCone);
LVMB_DEFINE_ERROR(NotConditionK);
LVMB_DEFINE_ERROR(OddVertexCount);
LVMB_DEFINE_ERROR(EvenVertexCount);
LVMB_DEFINE_ERROR(StarshapeViolated);
LVMB_DEFINE_ERROR(VerificationFailed);
LVMB_DEFINE_ERROR(ZeroVertex);
LVMB_DEFINE_ERROR(DegenerateFacet);
LVMB_DEFINE_ERROR(LabelOverflow);
LVMB_DEFINE_ERROR(TooLarge);
LVMB_DEFINE_ERROR(NoIndispensable);
LVMB_DEFINE_ERROR(MalformedInput);

#undef LVMB_DEFINE_ERROR

}  // namespace lvmb

#endif  // LVMB_ERRORS_HPP
