#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace medbounds {

/// Base class for all library errors. `name()` is the stable machine-readable
/// identifier printed by the CLI on standard error.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class NegativeProbability : public Error {
public:
    explicit NegativeProbability(const std::string& w) : Error("NegativeProbability", w) {}
};

class ArmNotNormalized : public Error {
public:
    explicit ArmNotNormalized(const std::string& w) : Error("ArmNotNormalized", w) {}
};

class EmptyArm : public Error {
public:
    explicit EmptyArm(const std::string& w) : Error("EmptyArm", w) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& w) : Error("IndexOutOfRange", w) {}
};

class UnknownEstimand : public Error {
public:
    explicit UnknownEstimand(const std::string& w) : Error("UnknownEstimand", w) {}
};

class NoClosedForm : public Error {
public:
    explicit NoClosedForm(const std::string& w) : Error("NoClosedForm", w) {}
};

class Infeasible : public Error {
public:
    explicit Infeasible(const std::string& w) : Error("Infeasible", w) {}
};

class NumericalFailure : public Error {
public:
    explicit NumericalFailure(const std::string& w) : Error("NumericalFailure", w) {}
};

class DegenerateDraw : public Error {
public:
    explicit DegenerateDraw(const std::string& w) : Error("DegenerateDraw", w) {}
};

class MalformedInput : public Error {
public:
    explicit MalformedInput(const std::string& w) : Error("MalformedInput", w) {}
};

}  // namespace medbounds
