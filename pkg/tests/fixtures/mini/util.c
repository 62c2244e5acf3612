#include "pkt.h"

int is_magic_byte(uint8_t b) {
    return b == 0x7E;
}

int process(const uint8_t *data, size_t len) {
    struct pkt_t pkt;
    if (parse_header(data, len, &pkt) != 0) {
        return -1;
    }
    return (int)pkt.len;
}
