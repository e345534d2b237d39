package com.acme.shop.catalog;

public class PriceTag {
    public PriceTag() {
    }

    public int priceCents() {
        return 1999;
    }

    public int discountPercent() {
        return 10;
    }
}
