#pragma once

/** @file dirac1d/profile_io.hpp
    @brief Plain-text profile files: one segment per line as "s v L", '#' starts a comment.
 */

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dirac1d/transfer.hpp"

namespace dirac1d
{

class ProfileParseError : public std::runtime_error
{
public:
  ProfileParseError(int line, const std::string& what)
    : std::runtime_error("profile line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

inline ProfileSpec parse_profile(std::istream& in)
{
  ProfileSpec profile;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw))
  {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    PotentialSegment seg;
    if (!(fields >> seg.s))
    {
      if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ProfileParseError(line_no, "expected \"s v L\"");
    }
    if (!(fields >> seg.v >> seg.L))
      throw ProfileParseError(line_no, "expected \"s v L\"");
    std::string extra;
    if (fields >> extra)
      throw ProfileParseError(line_no, "trailing field \"" + extra + "\"");
    if (!(seg.L > 0.0) || std::isinf(seg.L))
      throw ProfileParseError(line_no, "width L must be finite and > 0");
    profile.segments.push_back(seg);
  }
  if (profile.segments.empty())
    throw ProfileParseError(line_no, "profile has no segments");
  return profile;
}

inline ProfileSpec parse_profile(const std::string& text)
{
  std::istringstream in(text);
  return parse_profile(in);
}

} // namespace dirac1d
