#include <string.h>

#include "pkt.h"

uint8_t u8_min(uint8_t a, uint8_t b) {
    if (a < b) {
        return a;
    }
    return b;
}

uint8_t u8_max(uint8_t a, uint8_t b) {
    if (a > b) {
        return a;
    }
    return b;
}

int hex_nibble(int c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
    }
    return -1;
}

uint32_t sum_bytes(const uint8_t *p, size_t n) {
    uint32_t acc = 0;
    size_t i;
    for (i = 0; i < n; i++) {
        acc += p[i];
    }
    return acc;
}

int is_frame_type(uint8_t t) {
    return t == 1 || t == 2 || t == 3;
}

void be16_write(uint8_t *p, uint16_t v) {
    p[0] = (uint8_t)(v >> 8);
    p[1] = (uint8_t)(v & 0xFF);
}

static size_t skip_spaces(const uint8_t *p, size_t n) {
    size_t i = 0;
    while (i < n) {
        if (p[i] != ' ') {
            break;
        } else {
            i++;
        }
    }
    return i;
}

/* Copies header then body into a preallocated frame buffer. */
void frame_copy(uint8_t *dst, const uint8_t *hdr, const uint8_t *body,
                uint16_t body_len) {
    size_t off;
    off = skip_spaces(hdr, 4);
    memcpy(dst, hdr + off, 4 - off);
    memcpy(dst + 4 - off, body, body_len);
}
