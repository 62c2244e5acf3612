#include "pkt.h"

/* Reads a big-endian 16-bit field. */
uint16_t read_be16(const uint8_t *p) {
    return (uint16_t)((p[0] << 8) | p[1]);
}

int check_magic(const uint8_t *p) {
    return is_magic_byte(p[0]);
}

/* Parses the fixed four-byte header into out. */
int parse_header(const uint8_t *data, size_t len, struct pkt_t *out) {
    if (len < 4) {
        return -1;
    }
    if (!check_magic(data)) {
        return -1;
    }
    out->len = read_be16(data + 2);
    out->payload = data + 4;
    return 0;
}
