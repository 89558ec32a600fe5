#pragma once

#include <iosfwd>
#include <string>

#include "ksl/functions.hpp"

namespace ksl {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Line-oriented text formats, '#' starts a comment, blank lines ignored.
//   semigroup: "n <N>", then N rows of N indices, optional "identity <k>"
//   sigma:     one line of N indices
//   measure:   lines "<index> <re> <im>"
//   function:  N lines "<re> <im>"
FiniteSemigroup parse_semigroup(std::istream& in);
InvolutiveAutomorphism parse_sigma(std::istream& in, const FiniteSemigroup& S);
DiscreteMeasure parse_measure(std::istream& in, const FiniteSemigroup& S);
CFunction parse_function(std::istream& in, const FiniteSemigroup& S);

FiniteSemigroup read_semigroup(const std::string& path);
InvolutiveAutomorphism read_sigma(const std::string& path, const FiniteSemigroup& S);
DiscreteMeasure read_measure(const std::string& path, const FiniteSemigroup& S);
CFunction read_function(const std::string& path, const FiniteSemigroup& S);

void write_semigroup(std::ostream& out, const FiniteSemigroup& S);
void write_sigma(std::ostream& out, const InvolutiveAutomorphism& sigma);
void write_function(std::ostream& out, const CFunction& f);

}  // namespace ksl
