#include <openssl/sha.h>

#include <iomanip>
#include <sstream>

#include "relcone/jobs/jobs.hpp"

namespace relcone::jobs {

std::string input_digest(const json& job)
{
    const std::string canonical = job.dump();
    unsigned char hash[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char*>(canonical.data()), canonical.size(), hash);
    std::ostringstream os;
    os << "sha256:" << std::hex << std::setfill('0');
    for (unsigned char b : hash)
        os << std::setw(2) << static_cast<int>(b);
    return os.str();
}

std::string render_json(const json& report) { return report.dump(2) + "\n"; }

} // namespace relcone::jobs
