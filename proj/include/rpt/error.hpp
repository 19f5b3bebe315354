#pragma once

#include <stdexcept>
#include <string>

namespace rpt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define RPT_DEFINE_ERROR(Name)          \
  struct Name : Error {                 \
    using Error::Error;                 \
  }

RPT_DEFINE_ERROR(IllegalRank);
RPT_DEFINE_ERROR(NotARoot);
RPT_DEFINE_ERROR(NotPositive);
RPT_DEFINE_ERROR(RankGuardExceeded);
RPT_DEFINE_ERROR(EmptyS);
RPT_DEFINE_ERROR(CertificationFailure);
RPT_DEFINE_ERROR(NotAbelian);
RPT_DEFINE_ERROR(NotMembers);
RPT_DEFINE_ERROR(RankViolation);
RPT_DEFINE_ERROR(SingularSet);
RPT_DEFINE_ERROR(UnknownType);
RPT_DEFINE_ERROR(DegenerateInput);
RPT_DEFINE_ERROR(OrbitGuardExceeded);
RPT_DEFINE_ERROR(UsageError);

#undef RPT_DEFINE_ERROR

}  // namespace rpt
