#pragma once

#include <stdexcept>
#include <string>

namespace sma {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid (m, n, s, t) quadruple: m*s != n*t or fill counts out of range.
class spec_error : public error {
 public:
  using error::error;
};

class argument_error : public error {
 public:
  using error::error;
};

// Grid composition failed (overlapping cells, no free diagonal band, ...).
class composition_error : public error {
 public:
  using error::error;
};

// Parameters outside a construction's existence region. `condition()` names
// the violated condition.
class unsupported_params : public error {
 public:
  explicit unsupported_params(const std::string& condition)
      : error("unsupported parameters: " + condition), condition_(condition) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

class provider_error : public error {
 public:
  provider_error(const std::string& key, const std::string& what)
      : error("provider " + key + ": " + what), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class provider_timeout : public provider_error {
 public:
  provider_timeout(const std::string& key, const std::string& what)
      : provider_error(key, what) {}
};

class integrity_error : public error {
 public:
  integrity_error(const std::string& key, const std::string& what)
      : error("catalog entry " + key + ": " + what), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class parse_error : public error {
 public:
  using error::error;
};

}  // namespace sma
