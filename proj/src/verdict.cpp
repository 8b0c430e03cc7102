#include "poslab/verdict.hpp"

#include <utility>

namespace poslab {

const char* status_name(Status s) {
  switch (s) {
    case Status::PassCertified: return "PASS_CERTIFIED";
    case Status::PassSampled: return "PASS_SAMPLED";
    case Status::Fail: return "FAIL";
  }
  return "FAIL";
}

Verdict Verdict::certified(std::string check, std::string certificate, std::uint64_t effort) {
  Verdict v;
  v.status = Status::PassCertified;
  v.check = std::move(check);
  v.certificate = std::move(certificate);
  v.effort = effort;
  return v;
}

Verdict Verdict::sampled(std::string check, std::uint64_t effort) {
  Verdict v;
  v.status = Status::PassSampled;
  v.check = std::move(check);
  v.certificate = "sampled";
  v.effort = effort;
  return v;
}

Verdict Verdict::fail(std::string check, std::string clause, Witness witness, std::uint64_t effort) {
  Verdict v;
  v.status = Status::Fail;
  v.check = std::move(check);
  v.clause = std::move(clause);
  v.witness = std::move(witness);
  v.effort = effort;
  return v;
}

}  // namespace poslab
