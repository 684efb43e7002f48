#include <kdfkit/hmac.hpp>

namespace kdfkit {

Digest256 hmac_sha256(ByteView key, ByteView msg) {
    return hmac<Sha256>(key, msg);
}

}  // namespace kdfkit
