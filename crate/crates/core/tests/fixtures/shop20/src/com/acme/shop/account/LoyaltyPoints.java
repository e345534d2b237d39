package com.acme.shop.account;

public class LoyaltyPoints {
    private Customer customer;

    public LoyaltyPoints(Customer customer) {
        this.customer = customer;
    }

    public int pointTotal() {
        return 80;
    }

    public Customer customer() {
        return customer;
    }
}
