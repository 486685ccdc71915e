#ifndef GAIDX_ERROR_HPP
#define GAIDX_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaidx {

enum class Errc {
    LoopEdge,
    BadVertex,
    DuplicateEdge,
    BadGraph6,
    BadEdgeList,
    BadDegree,
    EmptyGraph,
    BadParams,
    NotApplicable,
    BadSpec,
    NoGraphs,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace gaidx

#endif
