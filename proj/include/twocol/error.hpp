#pragma once

#include <stdexcept>
#include <string>

namespace twocol {

enum class Errc {
    MalformedEmbedding,
    LoopPresent,
    NotOnFace,
    SameVertex,
    MissingElement,
    FacialCycle,
    NotACycle,
    VertexInC,
    DomainMismatch,
    NotNeighbors,
    TooLarge,
    KNotOnOuterFace,
    BadC,
    IrreducibleTarget,
    InapplicableStep,
    CertificationFailed,
    NotTriangulated,
    UnknownFamily,
    ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace twocol
