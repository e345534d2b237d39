package com.acme.shop.order;

import com.acme.shop.catalog.PriceTag;

public class Cart {
    private OrderLine orderLine;
    private PriceTag priceTag;
    private Checkout checkout;

    public Cart(OrderLine orderLine, PriceTag priceTag, Checkout checkout) {
        this.orderLine = orderLine;
        this.priceTag = priceTag;
        this.checkout = checkout;
    }

    public int itemCount() {
        return 0;
    }

    public OrderLine orderLine() {
        return orderLine;
    }
}
