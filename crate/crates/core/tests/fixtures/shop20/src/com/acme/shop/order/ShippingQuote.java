package com.acme.shop.order;

import com.acme.shop.account.Address;

public class ShippingQuote {
    private Address address;
    private Order order;

    public ShippingQuote(Address address, Order order) {
        this.address = address;
        this.order = order;
    }

    public int parcelWeight() {
        return 12;
    }

    public Address address() {
        return address;
    }
}
