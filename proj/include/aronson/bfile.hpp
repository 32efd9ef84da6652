#pragma once

#include <iosfwd>
#include <string>

#include "aronson/sequence.hpp"

namespace aronson {

// OEIS b-file layout: optional leading '#' comment lines, then one
// "<index> <value>\n" per term in ASCII decimal, indices strictly
// consecutive from the first line.

void write_bfile(std::ostream& out, const GeneratedSequence& seq);
void write_bfile(const std::string& path, const GeneratedSequence& seq);

// `monotone` marks the provenance of the loaded prefix; when true the terms
// are validated as strictly increasing.
GeneratedSequence read_bfile(std::istream& in, const std::string& origin, bool monotone = true);
GeneratedSequence read_bfile(const std::string& path, bool monotone = true);

}  // namespace aronson
