#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powerca {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input or precondition violations. The CLI maps these to exit code 2.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Iterative procedures that failed to converge. CLI exit code 3.
class NumericError : public Error {
public:
  using Error::Error;
};

// File system failures. CLI exit code 4.
class IoError : public Error {
public:
  using Error::Error;
};

enum class Margin { Row, Column };

inline const char* to_string(Margin m) { return m == Margin::Row ? "row" : "column"; }

class InvalidTable : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class InvalidArgument : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class ZeroMarginal : public ValidationError {
public:
  ZeroMarginal(std::size_t index, Margin margin)
      : ValidationError(std::string(to_string(margin)) + " " + std::to_string(index) +
                        " has a zero marginal total"),
        index_(index), margin_(margin) {}
  std::size_t index() const { return index_; }
  Margin margin() const { return margin_; }

private:
  std::size_t index_;
  Margin margin_;
};

class NonPositiveWeight : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class InvalidAlpha : public ValidationError {
public:
  explicit InvalidAlpha(double alpha)
      : ValidationError("power must lie in (0, 1], got " + std::to_string(alpha)) {}
};

// Cell-indexed errors share the (i, j) payload.
class CellError : public ValidationError {
public:
  CellError(const std::string& what, std::size_t i, std::size_t j)
      : ValidationError(what + " at cell (" + std::to_string(i) + ", " + std::to_string(j) +
                        ")"),
        row_(i), col_(j) {}
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

private:
  std::size_t row_;
  std::size_t col_;
};

class NonPositiveEntry : public CellError {
public:
  NonPositiveEntry(std::size_t i, std::size_t j) : CellError("non-positive entry", i, j) {}
};

// Log-ratio analysis needs every cell strictly positive.
class NonPositiveCell : public CellError {
public:
  NonPositiveCell(std::size_t i, std::size_t j)
      : CellError("zero or negative cell; log-ratio methods need n_ij > 0", i, j) {}
};

class NegativeEntry : public CellError {
public:
  NegativeEntry(std::size_t i, std::size_t j) : CellError("negative entry", i, j) {}
};

class BadZeroCount : public ValidationError {
public:
  BadZeroCount(long m, long rows)
      : ValidationError("zero count m=" + std::to_string(m) + " outside [1, " +
                        std::to_string(rows - 1) + "]") {}
};

class ZeroGrandMean : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class ZeroMatrix : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NotCentered : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class MismatchedSource : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class DimensionMismatch : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NotEnoughAxes : public ValidationError {
public:
  NotEnoughAxes(std::size_t requested, std::size_t available)
      : ValidationError("axis " + std::to_string(requested) + " requested but only " +
                        std::to_string(available) + " available") {}
};

class ParseError : public ValidationError {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t col)
      : ValidationError("line " + std::to_string(line) + ", field " + std::to_string(col) +
                        ": " + what),
        line_(line), col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

private:
  std::size_t line_;
  std::size_t col_;
};

class NoConvergence : public NumericError {
public:
  NoConvergence(std::size_t iterations, double residual)
      : NumericError("no convergence after " + std::to_string(iterations) +
                     " iterations (residual " + std::to_string(residual) + ")"),
        iterations_(iterations), residual_(residual) {}
  std::size_t iterations() const { return iterations_; }
  double residual() const { return residual_; }

private:
  std::size_t iterations_;
  double residual_;
};

}  // namespace powerca
