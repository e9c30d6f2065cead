#ifndef GMQ_CORE_IO_ERROR_HPP
#define GMQ_CORE_IO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gmq {

struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gmq

#endif
