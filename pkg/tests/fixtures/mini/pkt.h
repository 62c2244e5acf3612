#ifndef MINI_PKT_H
#define MINI_PKT_H

#include <stddef.h>
#include <stdint.h>

struct pkt_t {
    uint16_t len;
    const uint8_t *payload;
};

uint16_t read_be16(const uint8_t *p);
int check_magic(const uint8_t *p);
int is_magic_byte(uint8_t b);
int parse_header(const uint8_t *data, size_t len, struct pkt_t *out);
int process(const uint8_t *data, size_t len);

#endif
