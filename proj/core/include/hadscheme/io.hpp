#ifndef HADSCHEME_IO_HPP
#define HADSCHEME_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hadscheme/builder.hpp"
#include "hadscheme/hadamard.hpp"
#include "hadscheme/scheme.hpp"

namespace hadscheme {

// Scheme text: header line "n r", then n lines of n labels.  '#' starts a
// comment, whitespace is free-form.  Matrices are checked by verify_scheme
// on the way in, so relation 0 must be the identity.
AssociationScheme read_scheme(std::istream &in);
AssociationScheme read_scheme_file(const std::string &path);
void write_scheme(std::ostream &out, const AssociationScheme &s);
void write_scheme_file(const std::string &path, const AssociationScheme &s);

// Same format plus a comment naming the cover labels.
void write_cover_scheme(std::ostream &out, const CoverScheme &cs);
void write_cover_scheme_file(const std::string &path, const CoverScheme &cs);

// Hadamard text: header line "n", then n rows written with '+'/'-'.
// The reader also accepts rows of 1 / -1 tokens.
HadamardMatrix read_hadamard(std::istream &in);
HadamardMatrix read_hadamard_file(const std::string &path);
void write_hadamard(std::ostream &out, const HadamardMatrix &h);
void write_hadamard_file(const std::string &path, const HadamardMatrix &h);

std::string read_file(const std::string &path);
std::uint64_t fnv1a64(const std::string &bytes);

} // namespace hadscheme

#endif
