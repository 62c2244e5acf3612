#ifndef PKTLIB_PKTCFG_H
#define PKTLIB_PKTCFG_H

int cfg_load(void);
int cfg_get_flag(int idx);
void cfg_close(void);

#endif
