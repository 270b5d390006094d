#pragma once

#include <string>

#include "iqlat/shells.hpp"
#include "iqlat/verify.hpp"

namespace iqlat {

// JSON emission for every CLI report. Hand-rolled on purpose: coordinates are
// 128-bit integers (emitted as exact decimal literals) and floats use a fixed
// 12-significant-digit format, so output is byte-stable for fixed inputs.
// Key order within each object is fixed and documented by the formatters.

std::string fmt_double(double x);   // %.12g

std::string to_json(const ThetaTable& table, std::int64_t d);
std::string to_json(const Shell& shell, std::int64_t d);
std::string to_json(const DesignReport& report);
std::string to_json(const SurveyResult& result);
std::string to_json(const MultiplicativityResult& result);
std::string to_json(const CountFormulaResult& result);
std::string to_json(const CalcutResult& result);
std::string to_json(const SineProductResult& result);

} // namespace iqlat
