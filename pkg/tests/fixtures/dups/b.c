static int clamp_sample(int v) {
    if (v < 0) {
        return 0;
    }
    return v;
}

int scale_b(int v) {
    return clamp_sample(v + 16);
}
