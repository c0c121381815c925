#pragma once

#include <stdexcept>
#include <string>

namespace donut {

// Thrown when an internal structural guarantee fails. These guarantees mirror
// claims about the instance family, so a throw means either a bug or a
// falsified claim; the payload carries enough to reproduce the instance.
class claim_violation : public std::runtime_error {
 public:
  claim_violation(std::string claim, std::string detail, int k = -1,
                  std::string choice = "")
      : std::runtime_error(claim + ": " + detail),
        claim_(std::move(claim)),
        k_(k),
        choice_(std::move(choice)) {}

  const std::string& claim() const { return claim_; }
  int k() const { return k_; }
  const std::string& choice() const { return choice_; }
  void set_instance(int k, std::string choice) {
    k_ = k;
    choice_ = std::move(choice);
  }

 private:
  std::string claim_;
  int k_;
  std::string choice_;
};

}  // namespace donut
