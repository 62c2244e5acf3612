#ifndef PKTLIB_PKTTAB_H
#define PKTLIB_PKTTAB_H

#include <stddef.h>
#include <stdint.h>

void table_init(void);
int table_lookup(uint8_t type);
void table_free(void);
void buf_acquire(size_t n);
void buf_release(void);

#endif
