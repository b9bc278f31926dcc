#pragma once

#include <cstdlib>
#include <string>
#include <unistd.h>

namespace bergstab::testing {

/// Unique temporary path prefix (the file itself is created and removed so
/// the name is reserved safely).
inline std::string temp_path(const std::string& tag) {
    std::string tmpl = "/tmp/bergstab_" + tag + "_XXXXXX";
    std::string buf(tmpl);
    int fd = ::mkstemp(buf.data());
    if (fd >= 0) {
        ::close(fd);
        std::remove(buf.c_str());
    }
    return buf;
}

} // namespace bergstab::testing
