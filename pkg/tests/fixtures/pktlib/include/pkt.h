#ifndef PKTLIB_PKT_H
#define PKTLIB_PKT_H

#include <stddef.h>
#include <stdint.h>

#define PKT_HDR_LEN 8
#define PKT_MAX_BODY 512

#define PKT_OK 0
#define PKT_ERR_ARG (-1)
#define PKT_ERR_SHORT (-2)
#define PKT_ERR_MAGIC (-3)
#define PKT_ERR_SIZE (-4)
#define PKT_ERR_TRUNC (-5)
#define PKT_ERR_SUM (-6)

#define PKT_TYPE_DATA 1
#define PKT_TYPE_ACK 2
#define PKT_TYPE_NAME 3

typedef struct pkt_t {
    uint8_t type;
    uint16_t body_len;
    const uint8_t *body;
} pkt_t;

uint16_t read_be16(const uint8_t *p);
uint8_t checksum8(const uint8_t *p, size_t n);
int pkt_parse(const uint8_t *data, size_t len, pkt_t *out);
int pkt_validate(const pkt_t *pkt);
int walk_names(const uint8_t *data, size_t len);
void be16_write(uint8_t *p, uint16_t v);
uint8_t u8_min(uint8_t a, uint8_t b);
uint8_t u8_max(uint8_t a, uint8_t b);
int hex_nibble(int c);
uint32_t sum_bytes(const uint8_t *p, size_t n);
int is_frame_type(uint8_t t);
void frame_copy(uint8_t *dst, const uint8_t *hdr, const uint8_t *body,
                uint16_t body_len);

#endif
