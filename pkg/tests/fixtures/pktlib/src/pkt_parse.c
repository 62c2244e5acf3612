#include <stdlib.h>
#include <string.h>

#include "pkt.h"

/* Reads a big-endian 16-bit value. */
uint16_t read_be16(const uint8_t *p) {
    return (uint16_t)((p[0] << 8) | p[1]);
}

/* Sums n bytes into an 8-bit checksum. */
uint8_t checksum8(const uint8_t *p, size_t n) {
    uint32_t acc = 0;
    size_t i;
    for (i = 0; i < n; i++) {
        acc += p[i];
    }
    return (uint8_t)(acc & 0xFF);
}

static int check_magic(const uint8_t *data) {
    return memcmp(data, "ORN1", 4) == 0;
}

/* Legacy compact frames carry the old magic and no checksum. */
static int legacy_frame(const uint8_t *data, size_t len) {
    char *hdr;
    if (len < 4) {
        return PKT_ERR_SHORT;
    }
    if (memcmp(data, "oVfL", 4) != 0) {
        return PKT_ERR_MAGIC;
    }
    hdr = (char *)malloc(4);
    if (hdr == NULL) {
        return PKT_ERR_ARG;
    }
    memcpy(hdr, data, 4);
    hdr[4] = '\0'; /* bug: writes one byte past the allocation */
    free(hdr);
    return PKT_OK;
}

/* Parses a framed packet: magic, type, body length, checksum, body. */
int pkt_parse(const uint8_t *data, size_t len, pkt_t *out) {
    uint16_t body_len;
    if (data == NULL || out == NULL) {
        return PKT_ERR_ARG;
    }
    if (len < 4) {
        return PKT_ERR_SHORT;
    }
    if (!check_magic(data)) {
        return legacy_frame(data, len);
    }
    if (len < PKT_HDR_LEN) {
        return PKT_ERR_SHORT;
    }
    out->type = data[4];
    body_len = read_be16(data + 5);
    if (body_len > PKT_MAX_BODY) {
        return PKT_ERR_SIZE;
    }
    if ((size_t)body_len + PKT_HDR_LEN > len) {
        return PKT_ERR_TRUNC;
    }
    if (checksum8(data + PKT_HDR_LEN, body_len) != data[7]) {
        return PKT_ERR_SUM;
    }
    out->body_len = body_len;
    out->body = data + PKT_HDR_LEN;
    return PKT_OK;
}

int pkt_validate(const pkt_t *pkt) {
    if (pkt == NULL) {
        return 0;
    }
    switch (pkt->type) {
    case PKT_TYPE_DATA:
        return pkt->body_len > 0;
    case PKT_TYPE_ACK:
        return pkt->body_len == 0;
    case PKT_TYPE_NAME:
        return pkt->body_len >= 1;
    default:
        return 0;
    }
}
