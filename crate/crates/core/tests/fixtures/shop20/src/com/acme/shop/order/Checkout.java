package com.acme.shop.order;

import com.acme.shop.account.Wallet;

public class Checkout {
    private Cart cart;
    private Order order;
    private ShippingQuote shippingQuote;
    private Wallet wallet;

    public Checkout(Cart cart, Order order, ShippingQuote shippingQuote, Wallet wallet) {
        this.cart = cart;
        this.order = order;
        this.shippingQuote = shippingQuote;
        this.wallet = wallet;
    }

    public int stepNumber() {
        return 1;
    }

    public Cart cart() {
        return cart;
    }
}
